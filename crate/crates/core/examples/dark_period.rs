//! Dark periods of entanglement in a shared bath: E_N vanishes for a while
//! and then revives. Weaker squeezing gives longer dark periods.

use dcl::events::find_dark_period;
use dcl::BathParams;
use dcl::Squeeze;

fn main() -> dcl::Result<()> {
    println!("{:>5} {:>6} {:>10} {:>10} {:>10}", "T", "s", "t_off", "t_on", "length");
    for temp in [10.0, 15.0, 20.0, 25.0] {
        let bath = BathParams::new(0.2, temp)?;
        for sv in [0.8, 1.15, 1.5] {
            let report = find_dark_period(Squeeze::new(sv)?, bath, 30.0)?;
            match report.dark_period {
                Some((off, on)) => println!("{temp:>5} {sv:>6} {off:>10.5} {on:>10.5} {:>10.5}", on - off),
                None => println!("{temp:>5} {sv:>6} {:>10} {:>10} {:>10}", "-", "-", "0"),
            }
        }
    }
    Ok(())
}
