//! Builtin examples.

use crate::algebra::FiniteAlgebra;
use crate::coalgebra::FiniteCoalgebra;
use crate::field::Field;
use crate::groupoid::FiniteGroupoid;
use crate::linalg::{zero_vec, Matrix};
use crate::weakhopf::WeakHopfAlgebra;

fn sparse<F: Field>(dim: usize, terms: &[(usize, i64)]) -> Vec<F> {
    let mut v = zero_vec::<F>(dim);
    for &(i, c) in terms {
        v[i] += &F::from_int(c);
    }
    v
}

/// Cyclic group of order two as a one-object groupoid.
pub fn qc2_groupoid() -> FiniteGroupoid {
    FiniteGroupoid::cyclic_group(2)
}

/// Symmetric group on three letters; elements are permutations in
/// lexicographic order and `g·h` is `x ↦ g(h(x))`.
pub fn qs3_groupoid() -> FiniteGroupoid {
    let perms: Vec<[usize; 3]> = vec![
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    let index = |p: [usize; 3]| perms.iter().position(|q| *q == p).unwrap();
    let mult = perms
        .iter()
        .map(|g| {
            perms
                .iter()
                .map(|h| index([g[h[0]], g[h[1]], g[h[2]]]))
                .collect()
        })
        .collect();
    let names = perms
        .iter()
        .map(|p| format!("({}{}{})", p[0] + 1, p[1] + 1, p[2] + 1))
        .collect();
    FiniteGroupoid::group(names, mult).expect("permutation table")
}

/// Pair groupoid on two objects: identities `e1`, `e2`, `f: 1 → 2` and its
/// inverse. Matches the matrix units with `a: i → j ↦ E_ji`.
pub fn p2_groupoid() -> FiniteGroupoid {
    let names = ["e1", "e2", "f", "f^-1"].map(String::from).to_vec();
    let (e1, e2, f, fi) = (0, 1, 2, 3);
    let src = vec![0, 1, 0, 1];
    let tgt = vec![0, 1, 1, 0];
    let mut comp = vec![vec![None; 4]; 4];
    comp[e1][e1] = Some(e1);
    comp[e2][e2] = Some(e2);
    comp[f][e1] = Some(f);
    comp[e2][f] = Some(f);
    comp[fi][e2] = Some(fi);
    comp[e1][fi] = Some(fi);
    comp[f][fi] = Some(e2);
    comp[fi][f] = Some(e1);
    FiniteGroupoid::new(
        vec!["1".into(), "2".into()],
        names,
        src,
        tgt,
        comp,
        vec![e1, e2, fi, f],
        vec![e1, e2],
    )
    .expect("pair groupoid table")
}

/// Cyclic group of order two at one object, trivial group at another.
pub fn c2c1_groupoid() -> FiniteGroupoid {
    FiniteGroupoid::disjoint_union(&[
        FiniteGroupoid::cyclic_group(2),
        FiniteGroupoid::cyclic_group(1),
    ])
}

pub fn qc2<F: Field>() -> WeakHopfAlgebra<F> {
    qc2_groupoid().algebra()
}

pub fn qs3<F: Field>() -> WeakHopfAlgebra<F> {
    qs3_groupoid().algebra()
}

pub fn p2<F: Field>() -> WeakHopfAlgebra<F> {
    p2_groupoid().algebra()
}

pub fn c2c1<F: Field>() -> WeakHopfAlgebra<F> {
    c2c1_groupoid().algebra()
}

/// Sweedler's four-dimensional Hopf algebra on the basis `1, g, x, gx` with
/// `g² = 1`, `x² = 0`, `xg = −gx`, `Δx = x⊗1 + g⊗x` and `S(x) = −gx`.
pub fn h4<F: Field>() -> WeakHopfAlgebra<F> {
    const ONE: usize = 0;
    const G: usize = 1;
    const X: usize = 2;
    const GX: usize = 3;
    let table: [[&[(usize, i64)]; 4]; 4] = [
        [&[(ONE, 1)], &[(G, 1)], &[(X, 1)], &[(GX, 1)]],
        [&[(G, 1)], &[(ONE, 1)], &[(GX, 1)], &[(X, 1)]],
        [&[(X, 1)], &[(GX, -1)], &[], &[]],
        [&[(GX, 1)], &[(X, -1)], &[], &[]],
    ];
    let alg =
        FiniteAlgebra::from_products(4, sparse(4, &[(ONE, 1)]), |i, j| sparse(4, table[i][j]))
            .expect("square table");
    let coproducts: [&[(usize, i64)]; 4] = [
        &[(ONE * 4 + ONE, 1)],
        &[(G * 4 + G, 1)],
        &[(X * 4 + ONE, 1), (G * 4 + X, 1)],
        &[(GX * 4 + G, 1), (ONE * 4 + GX, 1)],
    ];
    let coalg = FiniteCoalgebra::from_coproducts(4, sparse(4, &[(ONE, 1), (G, 1)]), |i| {
        sparse(16, coproducts[i])
    })
    .expect("square table");
    let antipode = Matrix::from_columns(
        4,
        &[
            sparse(4, &[(ONE, 1)]),
            sparse(4, &[(G, 1)]),
            sparse(4, &[(GX, -1)]),
            sparse(4, &[(X, 1)]),
        ],
    )
    .expect("four columns");
    WeakHopfAlgebra::new(alg, coalg, antipode).expect("matching dimensions")
}

/// Two-dimensional coalgebra on `g, x` with `Δg = g⊗g`, `Δx = x⊗g + g⊗x`,
/// `ε(g) = 1`, `ε(x) = 0`.
pub fn sw2<F: Field>() -> FiniteCoalgebra<F> {
    FiniteCoalgebra::from_coproducts(2, sparse(2, &[(0, 1)]), |i| match i {
        0 => sparse(4, &[(0, 1)]),
        _ => sparse(4, &[(2, 1), (1, 1)]),
    })
    .expect("square table")
}

/// Names of the builtin weak Hopf algebras, in a fixed order.
pub const WEAK_HOPF_NAMES: [&str; 5] = ["qc2", "qs3", "h4", "p2", "c2c1"];

pub fn weak_hopf_by_name<F: Field>(name: &str) -> Option<WeakHopfAlgebra<F>> {
    Some(match name {
        "qc2" => qc2(),
        "qs3" => qs3(),
        "h4" => h4(),
        "p2" => p2(),
        "c2c1" => c2c1(),
        _ => return None,
    })
}

pub fn groupoid_by_name(name: &str) -> Option<FiniteGroupoid> {
    Some(match name {
        "qc2" => qc2_groupoid(),
        "qs3" => qs3_groupoid(),
        "p2" => p2_groupoid(),
        "c2c1" => c2c1_groupoid(),
        _ => return None,
    })
}
