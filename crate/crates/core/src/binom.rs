/// Binomial coefficient `C(n, k)`, zero when `k < 0` or `k > n`.
pub fn binomial(n: i64, k: i64) -> u64 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k) as u128;
    let n = n as u128;
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    u64::try_from(acc).expect("binomial coefficient overflows u64")
}
