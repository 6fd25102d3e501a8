use srg_borsuk::borsuk::verdict;

fn main() {
    for (dim, size, omega) in [(240, 2401, 9), (239, 2160, 9), (65, 416, 5), (782, 31671, 23), (5, 10, 2)] {
        println!("{}", verdict(dim, size, omega));
    }
}
