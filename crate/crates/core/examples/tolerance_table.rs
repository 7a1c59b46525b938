//! White-noise tolerances: the c(n) table and tolerances of custom partitions.
//!
//! ```text
//! cargo run --example tolerance_table
//! ```

use gsbench::tolerance::{c_factor, refined_path_cell_sizes, ssw_tolerance, white_noise_tolerance};

fn main() -> gsbench::Result<()> {
    println!("{:>3}  {:>6}  {:>9}  {:>9}  cells", "n", "c(n)", "p_tol", "SSW p_tol");
    for n in 1..=30 {
        println!(
            "{n:>3}  {:>6.3}  {:>9.5}  {:>9.5}  {:?}",
            c_factor(n)?,
            c_factor(n)? / n as f64,
            ssw_tolerance(n)?,
            refined_path_cell_sizes(n)
        );
    }
    // two colour classes of a 12-cycle, and the same cycle split into four arcs
    println!("\n12-cycle, 2 cells of 6: {:.5}", white_noise_tolerance(&[6, 6])?);
    println!("12-cycle, 4 cells of 3: {:.5}", white_noise_tolerance(&[3, 3, 3, 3])?);
    println!("empty cells are neutral: {:.5}", white_noise_tolerance(&[3, 3, 3, 3, 0])?);
    Ok(())
}
