//! The dense reference simulator: subsystem identity for a stabilizer
//! projector, and the separability bound on a product state.
//!
//! ```text
//! cargo run --example dense_oracle
//! ```

use gsbench::dense::{
    conjugate_boundary_cz, expectation, graph_state_vector, operator_inequality_check, partial_trace, projector_matrix,
    random_bipartite_product_state, random_density_matrix, Observable, DENSE_LIMIT,
};
use gsbench::{Graph, PauliString};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> gsbench::Result<()> {
    let g = Graph::grid(2, 3);
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let rho = random_density_matrix(g.n(), &mut rng);

    // tr(P(V', G) rho) equals the fidelity of the reduced, un-entangled state with |G'>
    let sub = [0, 1, 3];
    let lhs = expectation(&rho, Observable::Projector { graph: &g, cell: &sub })?;
    let reduced = partial_trace(&conjugate_boundary_cz(&rho, &g, &sub)?, &sub);
    let local = graph_state_vector(&g.induced_subgraph(&sub)?, DENSE_LIMIT)?;
    let rhs = (local.adjoint() * reduced * &local)[(0, 0)].re;
    println!("subsystem identity on {sub:?}: {lhs:.12} vs {rhs:.12}");

    // a product state across the edge (0, 1) cannot push <S_0> + <S_1> above 1
    let state = random_bipartite_product_state(&[0, 3, 4], &[1, 2, 5], 2)?;
    let s0 = expectation(&state, Observable::Pauli(&PauliString::stabilizer(&g, 0)?))?;
    let s1 = expectation(&state, Observable::Pauli(&PauliString::stabilizer(&g, 1)?))?;
    println!("product state: <S_0> + <S_1> = {:.6}", s0 + s1);

    let cells = [vec![0, 4], vec![1, 5], vec![2, 3]];
    let projectors = cells.iter().map(|c| projector_matrix(&g, c)).collect::<gsbench::Result<Vec<_>>>()?;
    println!("operator inequality, min eigenvalue: {:.3e}", operator_inequality_check(&projectors)?);
    Ok(())
}
