fn main() {
    println!("graphcodes");
}
