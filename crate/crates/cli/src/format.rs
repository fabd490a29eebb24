use std::io::{self, Write};

/// 17 significant digits in exponent form, with `-0` written as `0`.
pub fn num(x: f64) -> String {
    let x = if x == 0.0 { 0.0 } else { x };
    format!("{x:.16e}")
}

pub fn join(xs: &[f64]) -> String {
    xs.iter().map(|&x| num(x)).collect::<Vec<_>>().join(",")
}

/// Comment lines (prefixed `# `), a header, then one row per record. LF endings.
pub fn write_csv<W: Write>(mut w: W, comments: &[String], header: &[&str], rows: &[Vec<f64>]) -> io::Result<()> {
    for c in comments {
        writeln!(w, "# {c}")?;
    }
    writeln!(w, "{}", header.join(","))?;
    for row in rows {
        writeln!(w, "{}", join(row))?;
    }
    w.flush()
}

/// `v` and `f` records only; `faces` are 0-based here and written 1-based.
pub fn write_obj<W: Write>(mut w: W, vertices: &[[f64; 3]], faces: &[[usize; 3]]) -> io::Result<()> {
    for v in vertices {
        writeln!(w, "v {} {} {}", num(v[0]), num(v[1]), num(v[2]))?;
    }
    for f in faces {
        writeln!(w, "f {} {} {}", f[0] + 1, f[1] + 1, f[2] + 1)?;
    }
    w.flush()
}
