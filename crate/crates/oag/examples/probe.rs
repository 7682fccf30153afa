use oag::exactnum::{FieldBuilder, RealAlgebraic};

fn main() {
    let s2 = RealAlgebraic::sqrt_int(2).unwrap();
    let s3 = RealAlgebraic::sqrt_int(3).unwrap();
    let mut b = FieldBuilder::new();
    eprintln!("adjoin s2");
    b.adjoin(&s2).unwrap();
    eprintln!("adjoin s3");
    b.adjoin(&s3).unwrap();
    let (f, elems) = b.into_parts();
    eprintln!("dim = {}", f.dim());
    eprintln!("to_real(elems[0]) ...");
    let r0 = f.to_real(&elems[0]);
    eprintln!("got {r0}");
    eprintln!("eq check ...");
    assert_eq!(r0, s2);
    eprintln!("ok");
}
