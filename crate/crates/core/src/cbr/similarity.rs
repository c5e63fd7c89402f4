use super::CbrError;

/// Pearson product-moment correlation of two episodes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Similarity {
    pub value: f64,
    /// One of the vectors is constant; `value` is then 0.
    pub degenerate: bool,
}

/// Product-moment correlation coefficient of `x` and `y`, computed from the
/// deviations about each vector's mean.
pub fn similarity(x: &[f64], y: &[f64]) -> Result<Similarity, CbrError> {
    if x.len() != y.len() {
        return Err(CbrError::LengthMismatch { left: x.len(), right: y.len() });
    }
    let m = x.len() as f64;
    let mean_x = x.iter().sum::<f64>() / m;
    let mean_y = y.iter().sum::<f64>() / m;
    let (mut sxy, mut sxx, mut syy) = (0.0, 0.0, 0.0);
    for (a, b) in x.iter().zip(y) {
        let dx = a - mean_x;
        let dy = b - mean_y;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if sxx == 0.0 || syy == 0.0 {
        return Ok(Similarity { value: 0.0, degenerate: true });
    }
    let value = (sxy / (sxx * syy).sqrt()).clamp(-1.0, 1.0);
    Ok(Similarity { value, degenerate: false })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let x = [4., 4., 4., 4., 4., 4., 4., 4., 4., 4., 4., 0.];
        assert_eq!(similarity(&x, &x).unwrap().value, 1.0);

        let inc: Vec<f64> = (1..=12).map(f64::from).collect();
        let dec: Vec<f64> = (1..=12).rev().map(f64::from).collect();
        assert_eq!(similarity(&inc, &dec).unwrap().value, -1.0);

        let affine: Vec<f64> = inc.iter().map(|v| 2.0 * v + 3.0).collect();
        assert!((similarity(&inc, &affine).unwrap().value - 1.0).abs() < 1e-15);
    }

    #[test]
    fn constant_vectors_are_flagged() {
        let c = [4.0; 12];
        let inc: Vec<f64> = (1..=12).map(f64::from).collect();
        assert_eq!(similarity(&c, &inc).unwrap(), Similarity { value: 0.0, degenerate: true });
        assert!(similarity(&inc, &c).unwrap().degenerate);
    }

    #[test]
    fn length_mismatch() {
        assert_eq!(similarity(&[1.0, 2.0], &[1.0, 2.0, 3.0]), Err(CbrError::LengthMismatch { left: 2, right: 3 }));
    }
}
