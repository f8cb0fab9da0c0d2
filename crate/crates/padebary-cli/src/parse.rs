//! Flag-value parsing: complex scalars and lists, inclusive grids, seed
//! sets, and analytic reference specifications.

use num_complex::Complex64;

use crate::CliError;

/// Parses a complex scalar written as "1.5", "2i", "-i", "1+2i", or
/// "3.5e-2-1e1i".
pub fn complex_scalar(text: &str) -> Result<Complex64, CliError> {
    let bad = || CliError::Input(format!("cannot parse \"{text}\" as a complex number"));
    let t = text.trim();
    if t.is_empty() {
        return Err(bad());
    }
    if !t.ends_with('i') && !t.ends_with('I') {
        let re: f64 = t.parse().map_err(|_| bad())?;
        return Ok(Complex64::new(re, 0.0));
    }

    let body = &t[..t.len() - 1];
    // The imaginary part starts at the last sign that is not an exponent
    // sign and not the leading sign of the whole literal.
    let chars: Vec<char> = body.chars().collect();
    let mut split = None;
    for (i, &ch) in chars.iter().enumerate().skip(1) {
        if (ch == '+' || ch == '-') && !matches!(chars[i - 1], 'e' | 'E') {
            split = Some(i);
        }
    }
    let imag_of = |s: &str| -> Result<f64, CliError> {
        match s {
            "" | "+" => Ok(1.0),
            "-" => Ok(-1.0),
            _ => s.parse().map_err(|_| bad()),
        }
    };
    match split {
        None => Ok(Complex64::new(0.0, imag_of(body)?)),
        Some(i) => {
            let re: f64 = body[..i].parse().map_err(|_| bad())?;
            Ok(Complex64::new(re, imag_of(&body[i..])?))
        }
    }
}

/// Parses a comma-separated list of complex scalars.
pub fn complex_list(text: &str) -> Result<Vec<Complex64>, CliError> {
    text.split(',').map(complex_scalar).collect()
}

/// Parses "start:stop:count" into an inclusive linearly spaced grid;
/// `count` must be at least 2.
pub fn grid(text: &str) -> Result<Vec<f64>, CliError> {
    let bad = |why: &str| CliError::Input(format!("bad grid \"{text}\": {why}"));
    let parts: Vec<&str> = text.split(':').collect();
    if parts.len() != 3 {
        return Err(bad("expected start:stop:count"));
    }
    let start: f64 = parts[0].parse().map_err(|_| bad("start is not a number"))?;
    let stop: f64 = parts[1].parse().map_err(|_| bad("stop is not a number"))?;
    let count: usize = parts[2].parse().map_err(|_| bad("count is not an integer"))?;
    if !start.is_finite() || !stop.is_finite() {
        return Err(bad("endpoints must be finite"));
    }
    if count < 2 {
        return Err(bad("count must be at least 2"));
    }
    let step = (stop - start) / (count - 1) as f64;
    Ok((0..count).map(|i| start + step * i as f64).collect())
}

/// Parses a seed set: an inclusive range "1..20" or a comma list "3,5,8".
pub fn seeds(text: &str) -> Result<Vec<u64>, CliError> {
    let bad = || CliError::Input(format!("bad seed list \"{text}\": use \"a..b\" or \"a,b,c\""));
    if let Some((lo, hi)) = text.split_once("..") {
        let lo: u64 = lo.trim().parse().map_err(|_| bad())?;
        let hi: u64 = hi.trim().parse().map_err(|_| bad())?;
        if hi < lo {
            return Err(bad());
        }
        return Ok((lo..=hi).collect());
    }
    let list = text
        .split(',')
        .map(|s| s.trim().parse().map_err(|_| bad()))
        .collect::<Result<Vec<u64>, _>>()?;
    if list.is_empty() {
        return Err(bad());
    }
    Ok(list)
}

/// An analytic reference function for error columns.
pub enum RefSpec {
    TanOverT(f64),
    Log1pOverT,
    Exp,
    Geometric(Complex64),
    Constant(Complex64),
}

impl RefSpec {
    /// Parses "tan-over-t:OMEGA", "log1p-over-t", "exp", "geometric:R", or
    /// "constant:V".
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let (name, param) = match text.split_once(':') {
            Some((n, p)) => (n, Some(p)),
            None => (text, None),
        };
        let no_param = |spec: RefSpec| match param {
            Some(_) => Err(CliError::Input(format!("reference \"{name}\" takes no parameter"))),
            None => Ok(spec),
        };
        match name {
            "tan-over-t" => {
                let omega = match param {
                    Some(p) => p
                        .parse()
                        .map_err(|_| CliError::Input(format!("bad omega \"{p}\"")))?,
                    None => 1.0,
                };
                Ok(RefSpec::TanOverT(omega))
            }
            "log1p-over-t" => no_param(RefSpec::Log1pOverT),
            "exp" => no_param(RefSpec::Exp),
            "geometric" => Ok(RefSpec::Geometric(complex_scalar(param.unwrap_or("2"))?)),
            "constant" => Ok(RefSpec::Constant(complex_scalar(param.unwrap_or("0"))?)),
            _ => Err(CliError::Input(format!("unknown reference \"{text}\""))),
        }
    }

    /// The reference value at a real grid point (removable singularities at
    /// the origin filled with their limits).
    pub fn eval(&self, t: f64) -> Complex64 {
        match self {
            RefSpec::TanOverT(omega) => {
                let x = omega * t;
                if x == 0.0 {
                    Complex64::new(1.0, 0.0)
                } else {
                    Complex64::new(x.tan() / x, 0.0)
                }
            }
            RefSpec::Log1pOverT => {
                if t == 0.0 {
                    Complex64::new(1.0, 0.0)
                } else {
                    Complex64::new(t.ln_1p() / t, 0.0)
                }
            }
            RefSpec::Exp => Complex64::new(t.exp(), 0.0),
            RefSpec::Geometric(r) => Complex64::new(1.0, 0.0) / (Complex64::new(1.0, 0.0) - r * t),
            RefSpec::Constant(v) => *v,
        }
    }
}
