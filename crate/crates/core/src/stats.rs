//! Rank and linear statistics: tie-corrected Kendall rank correlation,
//! Pearson correlation, distribution summaries and simple least-squares
//! fits with t-based significance.

use crate::error::{Error, Result};

fn check_finite(v: &[f64], what: &'static str) -> Result<()> {
    if v.iter().all(|x| x.is_finite()) {
        Ok(())
    } else {
        Err(Error::NonFinite(what))
    }
}

fn check_varies(v: &[f64], what: &'static str) -> Result<()> {
    if v.windows(2).all(|w| w[0] == w[1]) {
        Err(Error::ConstantInput(what))
    } else {
        Ok(())
    }
}

fn check_pair(x: &[f64], y: &[f64], what: &'static str, min: usize) -> Result<()> {
    if x.len() != y.len() {
        return Err(Error::LengthMismatch {
            left: x.len(),
            right: y.len(),
        });
    }
    if x.len() < min {
        return Err(Error::InsufficientData {
            what,
            min,
            got: x.len(),
        });
    }
    check_finite(x, what)?;
    check_finite(y, what)
}

/// Assemble the tie-corrected rank correlation from pair counts:
/// `(C-D) / sqrt((n0-n1)(n0-n2))` with `n0 = n(n-1)/2` and `n1`/`n2` the
/// tied-pair counts of each input. Shared by the fast path and any
/// pair-enumeration cross-check so both produce identical floats.
pub fn tau_b_from_counts(c_minus_d: i64, n0: i64, n1: i64, n2: i64) -> f64 {
    c_minus_d as f64 / (((n0 - n1) as f64) * ((n0 - n2) as f64)).sqrt()
}

/// Kendall Tau-b rank correlation with tie correction, computed in
/// O(n log n) by sorting and inversion counting.
pub fn kendall_tau(x: &[f64], y: &[f64]) -> Result<f64> {
    check_pair(x, y, "kendall_tau", 2)?;
    check_varies(x, "kendall_tau x")?;
    check_varies(y, "kendall_tau y")?;
    let n = x.len();

    let mut idx: Vec<usize> = (0..n).collect();
    idx.sort_by(|&a, &b| x[a].total_cmp(&x[b]).then(y[a].total_cmp(&y[b])));

    // tied pairs within x (n1) and within joint (x, y) values (n3)
    let mut n1: i64 = 0;
    let mut n3: i64 = 0;
    let mut i = 0;
    while i < n {
        let mut j = i + 1;
        while j < n && x[idx[j]] == x[idx[i]] {
            j += 1;
        }
        let t = (j - i) as i64;
        n1 += t * (t - 1) / 2;
        let mut a = i;
        while a < j {
            let mut b = a + 1;
            while b < j && y[idx[b]] == y[idx[a]] {
                b += 1;
            }
            let u = (b - a) as i64;
            n3 += u * (u - 1) / 2;
            a = b;
        }
        i = j;
    }

    // discordant pairs = inversions of y once sorted by (x, y)
    let mut ys: Vec<f64> = idx.iter().map(|&k| y[k]).collect();
    let swaps = count_inversions(&mut ys) as i64;

    // tied pairs within y (n2)
    let mut sy = y.to_vec();
    sy.sort_by(f64::total_cmp);
    let mut n2: i64 = 0;
    let mut i = 0;
    while i < n {
        let mut j = i + 1;
        while j < n && sy[j] == sy[i] {
            j += 1;
        }
        let t = (j - i) as i64;
        n2 += t * (t - 1) / 2;
        i = j;
    }

    let n0 = (n as i64) * (n as i64 - 1) / 2;
    let c_minus_d = n0 - n1 - n2 + n3 - 2 * swaps;
    Ok(tau_b_from_counts(c_minus_d, n0, n1, n2))
}

/// Strict inversion count via merge sort; leaves `a` sorted.
fn count_inversions(a: &mut [f64]) -> u64 {
    let mut buf = a.to_vec();
    sort_count(a, &mut buf)
}

fn sort_count(a: &mut [f64], buf: &mut [f64]) -> u64 {
    let n = a.len();
    if n < 2 {
        return 0;
    }
    let mid = n / 2;
    let mut inv = sort_count(&mut a[..mid], &mut buf[..mid]);
    inv += sort_count(&mut a[mid..], &mut buf[mid..]);
    let (mut i, mut j, mut k) = (0, mid, 0);
    while i < mid && j < n {
        if a[j] < a[i] {
            inv += (mid - i) as u64;
            buf[k] = a[j];
            j += 1;
        } else {
            buf[k] = a[i];
            i += 1;
        }
        k += 1;
    }
    while i < mid {
        buf[k] = a[i];
        i += 1;
        k += 1;
    }
    while j < n {
        buf[k] = a[j];
        j += 1;
        k += 1;
    }
    a.copy_from_slice(&buf[..n]);
    inv
}

/// Sample Pearson correlation coefficient.
pub fn pearson(x: &[f64], y: &[f64]) -> Result<f64> {
    check_pair(x, y, "pearson", 2)?;
    let n = x.len() as f64;
    let mx = x.iter().sum::<f64>() / n;
    let my = y.iter().sum::<f64>() / n;
    let mut sxx = 0.0;
    let mut syy = 0.0;
    let mut sxy = 0.0;
    for (&xi, &yi) in x.iter().zip(y) {
        let dx = xi - mx;
        let dy = yi - my;
        sxx += dx * dx;
        syy += dy * dy;
        sxy += dx * dy;
    }
    if sxx == 0.0 {
        return Err(Error::ConstantInput("pearson x"));
    }
    if syy == 0.0 {
        return Err(Error::ConstantInput("pearson y"));
    }
    Ok(sxy / (sxx * syy).sqrt())
}

/// Five-number-style summary of a sample.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct DistributionSummary {
    pub mean: f64,
    pub median: f64,
    pub std: f64,
    pub iqr: f64,
    pub min: f64,
    pub max: f64,
    pub n: usize,
}

/// Quantile by linear interpolation at rank `p * (n-1)` over sorted values.
fn quantile_sorted(sorted: &[f64], p: f64) -> f64 {
    let n = sorted.len();
    if n == 1 {
        return sorted[0];
    }
    let h = p * (n - 1) as f64;
    let lo = h.floor() as usize;
    let hi = lo.min(n - 2) + 1;
    let frac = h - lo as f64;
    sorted[lo] + frac * (sorted[hi] - sorted[lo])
}

/// Summarize a sample: mean, interpolated median/IQR, sample standard
/// deviation (`n-1` denominator, 0 for a single value), min and max.
pub fn summarize(values: &[f64]) -> Result<DistributionSummary> {
    if values.is_empty() {
        return Err(Error::InsufficientData {
            what: "summarize",
            min: 1,
            got: 0,
        });
    }
    check_finite(values, "summarize")?;
    let n = values.len();
    let mut sorted = values.to_vec();
    sorted.sort_by(f64::total_cmp);
    let mean = values.iter().sum::<f64>() / n as f64;
    let std = if n == 1 {
        0.0
    } else {
        let ss: f64 = values.iter().map(|&v| (v - mean) * (v - mean)).sum();
        (ss / (n - 1) as f64).sqrt()
    };
    Ok(DistributionSummary {
        mean,
        median: quantile_sorted(&sorted, 0.5),
        std,
        iqr: quantile_sorted(&sorted, 0.75) - quantile_sorted(&sorted, 0.25),
        min: sorted[0],
        max: sorted[n - 1],
        n,
    })
}

/// Simple least-squares line fit with a two-sided t-test on the slope.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OlsFit {
    pub slope: f64,
    pub intercept: f64,
    pub r_squared: f64,
    pub p_value: f64,
    pub n: usize,
}

/// Ordinary least squares of `y` on `x`. The p-value tests H0: slope = 0
/// against the t distribution with `n-2` degrees of freedom.
pub fn ols_fit(x: &[f64], y: &[f64]) -> Result<OlsFit> {
    check_pair(x, y, "ols_fit", 3)?;
    let n = x.len();
    let nf = n as f64;
    let mx = x.iter().sum::<f64>() / nf;
    let my = y.iter().sum::<f64>() / nf;
    let mut sxx = 0.0;
    let mut syy = 0.0;
    let mut sxy = 0.0;
    for (&xi, &yi) in x.iter().zip(y) {
        let dx = xi - mx;
        let dy = yi - my;
        sxx += dx * dx;
        syy += dy * dy;
        sxy += dx * dy;
    }
    if sxx == 0.0 {
        return Err(Error::ConstantInput("ols_fit x"));
    }
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let ss_res: f64 = x
        .iter()
        .zip(y)
        .map(|(&xi, &yi)| {
            let r = yi - intercept - slope * xi;
            r * r
        })
        .sum();

    let (r_squared, p_value) = if syy == 0.0 {
        // constant response: the zero slope explains nothing and the test
        // has no evidence against it
        (0.0, 1.0)
    } else if ss_res == 0.0 {
        (1.0, 0.0)
    } else {
        let r2 = (1.0 - ss_res / syy).clamp(0.0, 1.0);
        let dof = (n - 2) as f64;
        let se = (ss_res / dof / sxx).sqrt();
        (r2, student_t_two_sided_p(slope / se, dof))
    };

    Ok(OlsFit {
        slope,
        intercept,
        r_squared,
        p_value,
        n,
    })
}

/// Two-sided tail probability of the t distribution: P(|T_dof| >= |t|).
pub fn student_t_two_sided_p(t: f64, dof: f64) -> f64 {
    reg_inc_beta(dof / 2.0, 0.5, dof / (dof + t * t))
}

/// Pearson correlation of every pair of equally long vectors. The result is
/// symmetric with a unit diagonal.
pub fn pairwise_network_consistency(vectors: &[Vec<f64>]) -> Result<Vec<Vec<f64>>> {
    let k = vectors.len();
    if let Some(first) = vectors.first() {
        for v in vectors {
            if v.len() != first.len() {
                return Err(Error::LengthMismatch {
                    left: first.len(),
                    right: v.len(),
                });
            }
        }
    }
    let mut matrix = vec![vec![0.0; k]; k];
    for u in 0..k {
        matrix[u][u] = 1.0;
        for v in u + 1..k {
            let r = pearson(&vectors[u], &vectors[v])?;
            matrix[u][v] = r;
            matrix[v][u] = r;
        }
    }
    Ok(matrix)
}

fn ln_gamma(x: f64) -> f64 {
    const COF: [f64; 6] = [
        76.180_091_729_471_46,
        -86.505_320_329_416_77,
        24.014_098_240_830_91,
        -1.231_739_572_450_155,
        0.120_865_097_386_617_9e-2,
        -0.539_523_938_495_3e-5,
    ];
    let mut y = x;
    let tmp = x + 5.5;
    let tmp = tmp - (x + 0.5) * tmp.ln();
    let mut ser = 1.000_000_000_190_015;
    for c in COF {
        y += 1.0;
        ser += c / y;
    }
    -tmp + (2.506_628_274_631_000_5 * ser / x).ln()
}

/// Continued-fraction kernel of the incomplete beta (modified Lentz).
fn betacf(a: f64, b: f64, x: f64) -> f64 {
    const MAX_IT: usize = 300;
    const EPS: f64 = 3e-16;
    const FPMIN: f64 = 1e-300;
    let qab = a + b;
    let qap = a + 1.0;
    let qam = a - 1.0;
    let mut c = 1.0;
    let mut d = 1.0 - qab * x / qap;
    if d.abs() < FPMIN {
        d = FPMIN;
    }
    d = 1.0 / d;
    let mut h = d;
    for m in 1..=MAX_IT {
        let mf = m as f64;
        let m2 = 2.0 * mf;
        let aa = mf * (b - mf) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if d.abs() < FPMIN {
            d = FPMIN;
        }
        c = 1.0 + aa / c;
        if c.abs() < FPMIN {
            c = FPMIN;
        }
        d = 1.0 / d;
        h *= d * c;
        let aa = -(a + mf) * (qab + mf) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if d.abs() < FPMIN {
            d = FPMIN;
        }
        c = 1.0 + aa / c;
        if c.abs() < FPMIN {
            c = FPMIN;
        }
        d = 1.0 / d;
        let del = d * c;
        h *= del;
        if (del - 1.0).abs() < EPS {
            break;
        }
    }
    h
}

/// Regularized incomplete beta function I_x(a, b).
pub(crate) fn reg_inc_beta(a: f64, b: f64, x: f64) -> f64 {
    if x <= 0.0 {
        return 0.0;
    }
    if x >= 1.0 {
        return 1.0;
    }
    let ln_front = ln_gamma(a + b) - ln_gamma(a) - ln_gamma(b) + a * x.ln() + b * (1.0 - x).ln();
    let front = ln_front.exp();
    if x < (a + 1.0) / (a + b + 2.0) {
        front * betacf(a, b, x) / a
    } else {
        1.0 - front * betacf(b, a, 1.0 - x) / b
    }
}
