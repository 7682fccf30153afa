fn main() { println!("oag"); }
