//! W/anti-W two-parameter region: bound 1 versus the comparator on a coarse grid.

use gme_bounds::scan::region_scan;

fn main() -> gme_bounds::Result<()> {
    let scan = region_scan(11, 11)?;
    println!("b\\a  0.0 .. 1.0   (B both, 1 bound 1 only, . neither)");
    for j in (0..scan.nb).rev() {
        let row: String = (0..scan.na)
            .map(|i| match scan.point(i, j).values {
                None => ' ',
                Some(v) if v.detected_huber() => 'B',
                Some(v) if v.detected_bound1() => '1',
                Some(_) => '.',
            })
            .collect();
        println!("{:.1}  {row}", j as f64 / (scan.nb - 1) as f64);
    }
    Ok(())
}
