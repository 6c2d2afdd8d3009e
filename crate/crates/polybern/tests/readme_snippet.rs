use num::bigint::BigUint;
use polybern::{Kind, Modulus};
use polybern::polybernoulli::{b_poly, c_poly};
use polybern::modular::b_neg_mod;
use polybern::congruence::verify_periodicity;

#[test]
fn readme_library_example_compiles_and_holds() {
    assert_eq!(b_poly(-2, 2), num::BigRational::from_integer(14.into()));
    assert_eq!(c_poly(1, 1).to_string(), "-1/2");

    let modulus = Modulus::new(360).unwrap();
    let n = BigUint::parse_bytes(b"1000000000000000000000000000000", 10).unwrap();
    let residue = b_neg_mod(3, &n, &modulus);
    assert!(residue.value < 360);

    let report = verify_periodicity(Kind::B, 3, &modulus, 4, 4 + modulus.totient()).unwrap();
    assert!(report.pass);
}
