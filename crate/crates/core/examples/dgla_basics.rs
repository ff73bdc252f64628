//! The differential, bracket and bar differential on a few generators.

use symcap::dgla::{bar_differential, bracket, differential, BarElement, Element, Generator};

fn main() -> symcap::Result<()> {
    let a = Element::gen(Generator::alpha(2, 1));
    let b = Element::gen(Generator::beta(1, 1));
    println!("d(a:2,1) = {}", differential(&a));
    println!("d(d(a:2,1)) = {}", differential(&differential(&a)));
    println!("[a:2,1, b:1,1] = {}", bracket(&a, &b));
    println!("[a:1,1, a:1,2] = {}", bracket(&Element::gen(Generator::alpha(1, 1)), &Element::gen(Generator::alpha(1, 2))));

    for w in ["a:2,1*b:1,0", "a:1,1*a:2,1*b:1,0", "a:1,1*a:1,2*a:2,1"] {
        let x = BarElement::word(w.parse()?);
        let dx = bar_differential(&x);
        println!("l({w}) = {dx}");
        println!("l(l({w})) = {}", bar_differential(&dx));
    }
    Ok(())
}
