use detpinv::minors::principal_minor_sum;
use detpinv::{aux_vectors, classify, fixtures, lss_axb, tilde_d, Result, SolvePath};

use crate::report::Report;

/// The 4×3 / 2×3 / 4×3 worked AXB = D example with every intermediate.
pub(crate) fn build(rep: &mut Report, path: SolvePath) -> Result<()> {
    let (a, b, d) = (
        fixtures::example_a(),
        fixtures::example_b(),
        fixtures::example_d(),
    );
    let (pa, pb) = (classify(&a), classify(&b));
    let ata = a.adjoint().matmul(&a)?;
    let bbt = b.matmul(&b.adjoint())?;
    let dt = tilde_d(&a, &d, &b)?;

    rep.line("worked example: minimum-norm least-squares solution of AXB = D");
    rep.matrix("A", &a);
    rep.matrix("B", &b);
    rep.matrix("D", &d);
    rep.profile("rank A", &pa);
    rep.profile("rank B", &pb);
    rep.matrix("A*A", &ata);
    rep.matrix("BB*", &bbt);
    rep.matrix("D~ = A*DB*", &dt);
    let den_a = principal_minor_sum(&ata, pa.rank);
    let den_b = principal_minor_sum(&bbt, pb.rank);
    rep.note(
        &format!("sum of principal {}-minors of A*A", pa.rank),
        &den_a.to_string(),
    );
    rep.note(
        &format!("sum of principal {}-minors of BB*", pb.rank),
        &den_b.to_string(),
    );
    for j in 1..=b.rows() {
        let aux = aux_vectors(&a, &b, &dt, 1, j, &pa, &pb)?;
        rep.matrix(&format!("d^B_.{j}"), &aux.d_col);
    }
    let sol = lss_axb(&a, &b, &d, path)?;
    rep.line(&format!(
        "erratum: the commonly printed form of this example gives 12 and entries like -1/72; \
         its displayed minors evaluate to 5, 0, 5 and 1, 0, so the denominator is {den_a}*{den_b} = {}",
        &den_a * &den_b
    ));
    rep.solution(&sol);
    Ok(())
}
