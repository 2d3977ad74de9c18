use toric_ccc::bundles::{graded_hom, TDivisor};
use toric_ccc::ccc::kappa;
use toric_ccc::charcycle::*;
use toric_ccc::fan::library_fan;

fn kcycle(fan: &str, c: &[i64]) -> CycleWithMultiplicity {
    let f = library_fan(fan).unwrap();
    let k = kappa(&f, &TDivisor::from_i64(c)).unwrap();
    characteristic_cycle(&PolyhedralSheaf {
        polytope: k.polytope,
        mode: SheafMode::CostandardOpen,
        shift: k.shift,
    })
    .unwrap()
}

fn show(label: &str, c: &CycleWithMultiplicity) {
    println!("== {label}");
    for cell in &c.canonical().cells {
        println!(
            "  base dim {:?} verts {:?} fiber {:?} mult {}",
            cell.base.dim,
            cell.base
                .vertices
                .iter()
                .map(|v| format!("{v}"))
                .collect::<Vec<_>>(),
            cell.fiber.ray_matrix(),
            cell.multiplicity
        );
    }
}

fn main() {
    let f = library_fan("P2").unwrap();
    let ca = kcycle("P2", &[0, 0, 1]);
    let cb = kcycle("P2", &[0, 0, 3]);
    show("CC kappa(O(H))", &ca);
    show("CC kappa(O(3H))", &cb);
    let dk = dk_pairing(&verdier_flip(&ca), &cb).unwrap();
    let euler = graded_hom(
        &f,
        &TDivisor::from_i64(&[0, 0, 1]),
        &TDivisor::from_i64(&[0, 0, 3]),
    )
    .unwrap()
    .euler;
    println!("dk = {dk}, euler = {euler}");
    let dk21 = dk_pairing(&verdier_flip(&kcycle("P2", &[0, 0, 2])), &ca).unwrap();
    let euler21 = graded_hom(
        &f,
        &TDivisor::from_i64(&[0, 0, 2]),
        &TDivisor::from_i64(&[0, 0, 1]),
    )
    .unwrap()
    .euler;
    println!("dk(2->1) = {dk21}, euler = {euler21}");
}
