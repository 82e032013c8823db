use std::fmt;

/// `(bound, RTD, VCD)` for a graph-induced class, where `bound` is Δ for
/// stars and ℓ for connected sets. The theory predicts
/// `bound <= rtd <= vcd <= bound + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Triple {
    pub bound: usize,
    pub rtd: usize,
    pub vcd: usize,
}

/// Which link of `bound <= rtd <= vcd <= bound + 1` is strict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Strict {
    BoundRtd,
    RtdVcd,
    VcdTop,
}

impl Strict {
    pub fn as_str(self) -> &'static str {
        match self {
            Strict::BoundRtd => "bound<rtd",
            Strict::RtdVcd => "rtd<vcd",
            Strict::VcdTop => "vcd<bound+1",
        }
    }
}

impl Triple {
    pub fn new(bound: usize, rtd: usize, vcd: usize) -> Self {
        Triple { bound, rtd, vcd }
    }

    pub fn chain_holds(&self) -> bool {
        self.bound <= self.rtd && self.rtd <= self.vcd && self.vcd <= self.bound + 1
    }

    /// The strict links of the chain.
    pub fn strict_links(&self) -> Vec<Strict> {
        let mut out = Vec::new();
        if self.bound < self.rtd {
            out.push(Strict::BoundRtd);
        }
        if self.rtd < self.vcd {
            out.push(Strict::RtdVcd);
        }
        if self.vcd < self.bound + 1 {
            out.push(Strict::VcdTop);
        }
        out
    }

    /// The single strict link, when the chain holds with exactly one.
    pub fn strict(&self) -> Option<Strict> {
        match self.strict_links().as_slice() {
            [s] if self.chain_holds() => Some(*s),
            _ => None,
        }
    }
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.bound, self.rtd, self.vcd)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn strict_position() {
        assert_eq!(Triple::new(2, 3, 3).strict(), Some(Strict::BoundRtd));
        assert_eq!(Triple::new(3, 3, 4).strict(), Some(Strict::RtdVcd));
        assert_eq!(Triple::new(2, 2, 2).strict(), Some(Strict::VcdTop));
        assert_eq!(Triple::new(2, 3, 2).strict(), None);
        assert_eq!(Triple::new(1, 2, 3).strict(), None);
    }
}
