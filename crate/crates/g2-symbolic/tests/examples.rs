use g2_symbolic::*;

fn x() -> RatFuncX {
    RatFuncX::x()
}

fn one_minus(a: Coef, k: usize) -> RatFuncX {
    RatFuncX::from_poly(Poly::one_minus(a, k))
}

fn coeffs(s: &SeriesX) -> Vec<Coef> {
    s.coeffs().to_vec()
}

#[test]
fn difference_of_squares() {
    let a = one_minus(int(1), 1);
    let b = RatFuncX::one().add(&x());
    assert_eq!(a.mul(&b), one_minus(int(1), 2));
}

#[test]
fn partial_fractions() {
    let a = RatFuncX::euler(&int(1), 1);
    let b = RatFuncX::euler(&int(-1), 1);
    let two_over = RatFuncX::euler(&int(1), 2).scale(&int(2));
    let sum = a.add(&b);
    assert_eq!(sum, two_over);
    assert_eq!(sum.to_text(), two_over.to_text());
    assert_eq!(sum.to_text(), "2 / 1 - X^2");
}

#[test]
fn self_quotient_is_one() {
    let a = one_minus(q_half(-7), 1);
    assert_eq!(a.div(&a).unwrap(), RatFuncX::one());
    assert_eq!(a.div(&a).unwrap().to_text(), "1 / 1");
}

#[test]
fn division_by_zero_is_an_error() {
    assert_eq!(
        RatFuncX::one().div(&RatFuncX::zero()),
        Err(SymbolicError::DivisionByZero)
    );
}

#[test]
fn geometric_series_examples() {
    let s = RatFuncX::euler(&int(1), 1).series(3).unwrap();
    assert_eq!(coeffs(&s), vec![int(1); 4]);
    let s = RatFuncX::euler(&q_half(-7), 1).series(2).unwrap();
    assert_eq!(coeffs(&s), vec![int(1), q_half(-7), q_half(-14)]);
}

#[test]
fn long_division_example() {
    // oracle: (1 - X) Σ q^k X^k, coefficient k is q^k - q^{k-1}
    let f = one_minus(int(1), 1).mul(&RatFuncX::euler(&q_pow(1), 1));
    let s = f.series(4).unwrap();
    for k in 0..=4 {
        let expect = if k == 0 {
            int(1)
        } else {
            &q_pow(k) - &q_pow(k - 1)
        };
        assert_eq!(s.coeff(k as usize), expect);
    }
}

#[test]
fn zero_constant_term_cannot_expand() {
    let f = RatFuncX::one().div(&x()).unwrap();
    assert_eq!(f.series(3), Err(SymbolicError::NonInvertibleConstantTerm));
}

#[test]
fn zeta_examples() {
    let z = zeta_local(7, 0, 1);
    assert_eq!(z, RatFuncX::euler(&q_half(-7), 1));
    assert_eq!(z.to_text(), "1 / 1 - q^(-7/2)*X^1");
    let z = zeta_local(3, 1, 2);
    assert_eq!(z, RatFuncX::euler(&(&c_pow(2) * &q_pow(-3)), 2));
    assert_eq!(zeta_local(0, 0, 1), RatFuncX::euler(&int(1), 1));
}

#[test]
fn je_split_and_quad() {
    let z = |s2, t, f| zeta_local(s2, t, f);
    let split = z(5, 1, 1).mul(&z(3, 1, 1)).mul(&z(3, 1, 1)).mul(&z(1, 1, 2));
    assert_eq!(je_local(LocalCubicType::Split), split);
    let quad = z(5, 1, 1).mul(&z(3, 1, 2)).mul(&z(1, 1, 2));
    assert_eq!(je_local(LocalCubicType::Quad), quad);
    // c-power of the X^2 term of ζ(2s+1) is 2
    let s = z(1, 1, 2).series(2).unwrap();
    assert_eq!(s.coeff(2), &c_pow(2) * &q_pow(-1));
}

#[test]
fn je_cubic_series_oracle() {
    // oracle: multiply truncated geometric series of each factor directly
    let k = 8;
    let geo = |a: Coef, f: usize| Series::geometric(&a, f, k);
    let mut expect = geo(&c_pow(1) * &q_half(-5), 1)
        .mul(&geo(&c_pow(3) * &q_half(-9), 3))
        .mul(&geo(&c_pow(2) * &q_pow(-1), 2));
    let lin = Series::from_poly(&Poly::one_minus(&c_pow(1) * &q_half(-3), 1), k);
    expect = expect.mul(&lin);
    assert_eq!(je_local(LocalCubicType::Cubic).series(k).unwrap(), expect);
}

#[test]
fn specialize_twist() {
    let z = zeta_local(3, 1, 2).at_c(&rat(1, 1));
    assert_eq!(z, RatFuncX::euler(&q_pow(-3), 2));
    assert_eq!(z.to_text(), "1 / 1 - q^(-6/2)*X^2");
}
