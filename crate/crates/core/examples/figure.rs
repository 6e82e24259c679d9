//! Regenerates one figure's data as CSV on stdout.
//!
//! cargo run --release --example figure -- fig8 > fig8.csv

use dcl::figures::{generate, Figure};

fn main() -> dcl::Result<()> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "fig6".into());
    let figure: Figure = name.parse()?;
    let table = generate(figure)?;
    eprintln!("{figure}: {} rows, columns {:?}", table.abscissa.len(), table.header());
    table.write_csv(std::io::stdout().lock())
}
