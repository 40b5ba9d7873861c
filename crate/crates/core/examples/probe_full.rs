use std::time::Instant;
use svoa_core::classify::*;
use svoa_core::lie::q;

fn main() {
    let t = Instant::now();
    let report = enumerate_semisimple(6, 24, 3).unwrap();
    println!("elapsed: {:?}", t.elapsed());
    println!("tested: {}", report.tested);
    println!("families: {:?}", report.families.iter().map(|f| (&f.name, f.instances.len())).collect::<Vec<_>>());
    println!("sporadic: {:?}", report.sporadic.iter().map(|c| &c.display).collect::<Vec<_>>());
    println!("survivors: {}", report.survivors.len());
    for s in &report.survivors {
        println!("  {}", s.display);
    }
    println!("rejected: {}", report.rejected.len());

    let t = Instant::now();
    let entries = enumerate_simple(q(3, 2), 64, 24).unwrap();
    println!("simple: {:?} in {:?}", entries.iter().map(|e| e.display()).collect::<Vec<_>>(), t.elapsed());
}
