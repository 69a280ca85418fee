fn main() {
    println!("morphkit");
}
