use teachdim::con::{build_con_class, con_tree_teacher};
use teachdim::dimensions::{rtd, vcd};
use teachdim::families::all_trees;
use teachdim::teaching::verify_pb_teacher;
use teachdim::tree::{max_leaf_number, max_leaf_number_exhaustive};
use teachdim::Limits;

#[test]
fn tree_dimensions_equal_leaf_count() {
    let l = Limits::default();
    for n in 3..=7 {
        for t in all_trees(n).unwrap() {
            let ell = max_leaf_number(&t, &l).unwrap();
            assert_eq!(ell, max_leaf_number_exhaustive(&t).unwrap());
            for empty in [false, true] {
                let cc = build_con_class(&t, empty, &l).unwrap();
                assert_eq!(rtd(&cc, &l).unwrap().rtd, ell, "n={n} empty={empty}");
                assert_eq!(vcd(&cc).unwrap().0, ell, "n={n} empty={empty}");
            }
            let (cc, teacher) = con_tree_teacher(&t, &l).unwrap();
            assert_eq!(verify_pb_teacher(&cc, &teacher).unwrap(), None);
            assert!(teacher.order() <= ell);
        }
    }
}

#[test]
fn tiny_trees() {
    let l = Limits::default();
    let dims = |n: usize, empty: bool| {
        let t = &all_trees(n).unwrap()[0];
        let cc = build_con_class(t, empty, &l).unwrap();
        (
            max_leaf_number(t, &l).unwrap(),
            rtd(&cc, &l).unwrap().rtd,
            vcd(&cc).unwrap().0,
        )
    };
    assert_eq!(dims(1, false), (0, 0, 0));
    assert_eq!(dims(1, true), (0, 1, 1));
    assert_eq!(dims(2, false), (1, 1, 1));
    assert_eq!(dims(2, true), (1, 2, 2));
}
