use srg_borsuk::srg::{distance_squares, gram_entries, spectrum};
use srg_borsuk::SrgParams;

fn main() {
    for p in [
        SrgParams::new(2401, 240, 59, 20),
        SrgParams::new(416, 100, 36, 20),
        SrgParams::new(31671, 3510, 693, 351),
        SrgParams::new(13, 6, 2, 3),
    ] {
        match spectrum(&p) {
            Ok(sp) => {
                let d = distance_squares(&p, &sp);
                let gram = gram_entries(&p, &sp);
                println!("{p}: r={} s={} f={} gram {gram:?} dist2 {d:?}", sp.r, sp.s, sp.f);
            }
            Err(e) => println!("{p}: {e}"),
        }
    }
}
