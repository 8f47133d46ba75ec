//! Runs every reproduction check and prints one line per check.

fn main() {
    let results = gme_bounds::verify::run_all();
    for r in &results {
        println!("{r}");
    }
    let failed = results.iter().filter(|r| !r.passed).count();
    println!("{} passed, {failed} failed", results.len() - failed);
}
