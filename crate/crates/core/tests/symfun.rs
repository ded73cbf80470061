use fermconic::symfun::kernel::kernel;
use fermconic::symfun::smn::{smn_option1_by_residues, weighted_degree};
use fermconic::symfun::*;

#[test]
fn option2_full_table() {
    let (_, table, r) = option2_frame(5, 1);
    println!("{r}");
    for c in &r.items {
        let printed = c.name.contains("e3^2 e2^2 e1 + e5 e3^3");
        assert_eq!(c.passed, !printed, "{}", c.name);
    }
    for ((m, n), p) in &table.entries {
        if !p.is_zero() {
            assert_eq!(weighted_degree(p), Some(18 * n + m), "S'_{m}{n}");
        }
    }
}

#[test]
fn option1_lift_matches_residues_up_to_five() {
    let t = option1_table(5);
    for ((m, n), p) in &t.entries {
        assert_eq!(*p, smn_option1_by_residues(*m, *n), "S_{m}{n}");
        if !p.is_zero() {
            assert_eq!(weighted_degree(p), Some(m + 13 * n), "S_{m}{n}");
        }
    }
}

#[test]
fn option1_exact_division_for_first_column() {
    let l = option1_l();
    let k = kernel();
    let t = option1_table(5);
    for m in 0..=4 {
        let q = smn_from_frame(m, 1, &l).unwrap();
        assert_eq!(q, e_to_u(t.s(m, 1), &k.esym));
    }
}

#[test]
fn tables_are_symmetric() {
    let k = kernel();
    let t = option2_table(2);
    for p in t.entries.values() {
        let pu = e_to_u(p, &k.esym);
        let mut swapped = u_gens();
        swapped.swap(1, 3);
        assert_eq!(pu.compose(&swapped).unwrap(), pu);
    }
}
