fn main() {
    println!("skewcode");
}
