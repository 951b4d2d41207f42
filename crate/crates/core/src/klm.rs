//! Sample-based checks of the rational consequence postulates.

use crate::logic::{models, Formula, Vocabulary};
use crate::report::CheckReport;

/// Syntactic variants of `theta` that are logically equivalent to it.
fn equivalent_variants(theta: &Formula) -> [Formula; 3] {
    [
        Formula::not(Formula::not(theta.clone())),
        Formula::and(theta.clone(), Formula::Top),
        Formula::or(Formula::Bottom, theta.clone()),
    ]
}

/// Checks REF, LLE, RW, AND, OR, CM and RM for `infers` over every triple
/// drawn from `sample`.
///
/// LLE is exercised both on sample pairs with equal model sets and on
/// syntactic variants of each sample formula.
pub fn check_rational_postulates<F>(mut infers: F, sample: &[Formula], vocab: &Vocabulary) -> CheckReport
where
    F: FnMut(&Formula, &Formula) -> bool,
{
    let mut report = CheckReport::default();
    let sets: Vec<_> = sample.iter().map(|f| models(f, vocab)).collect();
    let n = sample.len();
    // infers(sample[i], sample[j]), memoized since every law reuses it.
    let table: Vec<Vec<bool>> = (0..n)
        .map(|i| (0..n).map(|j| infers(&sample[i], &sample[j])).collect())
        .collect();

    for i in 0..n {
        let theta = &sample[i];
        report.check("REF", table[i][i], || vec![theta.clone()]);
        for variant in equivalent_variants(theta) {
            for j in 0..n {
                let holds = !table[i][j] || infers(&variant, &sample[j]);
                report.check("LLE", holds, || vec![theta.clone(), variant.clone(), sample[j].clone()]);
            }
        }
        for k in 0..n {
            if k != i && sets[k] == sets[i] {
                for j in 0..n {
                    let holds = table[i][j] == table[k][j];
                    report.check("LLE", holds, || {
                        vec![theta.clone(), sample[k].clone(), sample[j].clone()]
                    });
                }
            }
        }
    }

    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let (theta, phi, psi) = (&sample[i], &sample[j], &sample[k]);
                let witness = || vec![theta.clone(), phi.clone(), psi.clone()];
                // RW: θ |~ φ, φ ⊨ ψ ⇒ θ |~ ψ
                if table[i][j] && sets[j].is_subset(&sets[k]) {
                    report.check("RW", table[i][k], witness);
                }
                // AND: θ |~ φ, θ |~ ψ ⇒ θ |~ φ ∧ ψ
                if table[i][j] && table[i][k] {
                    let conj = Formula::and(phi.clone(), psi.clone());
                    report.check("AND", infers(theta, &conj), witness);
                    // CM: θ |~ φ, θ |~ ψ ⇒ θ ∧ φ |~ ψ
                    let strengthened = Formula::and(theta.clone(), phi.clone());
                    report.check("CM", infers(&strengthened, psi), witness);
                }
                // OR: θ |~ ψ, φ |~ ψ ⇒ θ ∨ φ |~ ψ
                if table[i][k] && table[j][k] {
                    let disj = Formula::or(theta.clone(), phi.clone());
                    report.check("OR", infers(&disj, psi), witness);
                }
                // RM: θ |~ ψ, θ |≁ ¬φ ⇒ θ ∧ φ |~ ψ
                if table[i][k] && !infers(theta, &Formula::not(phi.clone())) {
                    let strengthened = Formula::and(theta.clone(), phi.clone());
                    report.check("RM", infers(&strengthened, psi), witness);
                }
                if report.violation.is_some() {
                    return report;
                }
            }
        }
    }
    report
}
