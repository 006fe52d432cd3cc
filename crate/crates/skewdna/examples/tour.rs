//! A short tour: build the 16-element field, multiply under the twist,
//! build a code, and decide whether its DNA image reads the same backwards.
//!
//! Run with `cargo run --example tour`.

use skewdna::codes::SkewCyclicCode;
use skewdna::dna::{self, DnaTable};
use skewdna::gf::FieldDescriptor;
use skewdna::skewpoly::SkewPolynomial;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // F_16 with a^4 = a + 1; theta(v) = v^4 swaps each element with its
    // conjugate and fixes the subfield F_4.
    let field = FieldDescriptor::build(1)?;

    // Multiplication twists scalars past x: x*a = theta(a)*x.
    let x = SkewPolynomial::parse(&field, "x")?;
    let a = SkewPolynomial::parse(&field, "a^1")?;
    println!("x * a^1          = {}", x.mul(&a));

    // A degree-3 right divisor of x^6 - 1 generates a [6,3] code.
    let g = SkewPolynomial::parse(&field, "1 + a^7*x + a^13*x^2 + x^3")?;
    let code = SkewCyclicCode::build(&g, 6)?;
    println!(
        "code             = [{},{},{}]",
        code.length(),
        code.dimension(),
        code.minimum_distance()?
    );

    // Each field element is a pair of nucleotides; each codeword a 12-mer.
    let table = DnaTable::build(&field);
    let codeword = code
        .enumerate_codewords()?
        .nth(1)
        .expect("nonzero codeword");
    println!("phi(codeword)    = {}", table.phi(&codeword));

    // The generator's shape alone decides reversibility; the exhaustive
    // check walks all 4096 codewords and must agree.
    let structural = dna::is_reversible_dna_by_generator(&code);
    let exhaustive = dna::is_reversible_dna_code(&code, &table)?;
    assert_eq!(structural, exhaustive);
    println!("reversible DNA   = {structural}");

    // The dual code inherits reversibility.
    let dual = code.dual()?;
    println!("dual generator   = {}", dual.generator());
    println!(
        "dual reversible  = {}",
        dna::is_reversible_dna_code(&dual, &table)?
    );
    Ok(())
}
