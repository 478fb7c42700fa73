use super::{add, mul, IntScalar, NumericError};

/// `F_n` by fast doubling:
/// `F_{2k} = F_k (2 F_{k+1} - F_k)` and `F_{2k+1} = F_k^2 + F_{k+1}^2`.
pub fn fibonacci<T: IntScalar>(n: u64) -> Result<T, NumericError> {
    // stop one halving early so F_{n+1} is never formed
    let (a, b) = pair::<T>(n >> 1)?;
    if n & 1 == 0 {
        let diff = add(&b, &b)?.checked_sub(&a).ok_or(NumericError::Overflow)?;
        mul(&a, &diff)
    } else {
        add(&mul(&a, &a)?, &mul(&b, &b)?)
    }
}

/// `(F_n, F_{n+1})`, walking the bits of `n` from the top.
fn pair<T: IntScalar>(n: u64) -> Result<(T, T), NumericError> {
    let mut a = T::zero();
    let mut b = T::one();
    for bit in (0..u64::BITS - n.leading_zeros()).rev() {
        let two_b = add(&b, &b)?;
        let diff = two_b.checked_sub(&a).ok_or(NumericError::Overflow)?;
        let even = mul(&a, &diff)?;
        let odd = add(&mul(&a, &a)?, &mul(&b, &b)?)?;
        if (n >> bit) & 1 == 1 {
            b = add(&even, &odd)?;
            a = odd;
        } else {
            a = even;
            b = odd;
        }
    }
    Ok((a, b))
}
