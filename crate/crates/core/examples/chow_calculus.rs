//! Chern series, residual contributions and blow-up intersection numbers.

use vclass::chow::{blowup_pairing, residual_contribution, series_pow, ChernSeries, ChowClass};
use vclass::rational::format_rat;

fn main() -> vclass::Result<()> {
    // Conics tangent to five lines: the double lines contribute 31 of 2^5.
    let l4 = ChernSeries::from_ints(2, &[1, 4])?;
    let r = residual_contribution(
        &vec![l4; 5],
        &series_pow(&ChernSeries::from_ints(2, &[1, 2])?, 6),
        &series_pow(&ChernSeries::from_ints(2, &[1, 1])?, 3),
        &ChowClass::fundamental(2),
    )?;
    println!("residual contribution: {}, remaining: {}", format_rat(&r), 32 - 31);

    let p = blowup_pairing(3, 1)?;
    println!("blow-up of P3 along a line: H^2 E = {}, H E^2 = {}, E^3 = {}",
        format_rat(&p.integral(2, 1)?), format_rat(&p.integral(1, 2)?), format_rat(&p.integral(0, 3)?));
    Ok(())
}
