//! Locale-independent number rendering and the CSV / coefficient-dump
//! writers.

use std::io::{self, Write};

use tricav_core::{
    CoeffMatrices, Complex64, DressedBasis, RateSet, SteadyState, SweepTable, SystemParams,
    TransferMatrix,
};

pub const SIGNIFICANT_DIGITS: usize = 12;

pub const CSV_HEADER: &str = "coordinate,S123,S231,S312,entangled,variant";

/// `%.{digits}g`-style rendering: shortest of fixed or scientific notation,
/// trailing zeros removed, always `.` as the decimal point.
pub fn fmt_sig(x: f64, digits: usize) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return format!("{x}");
    }
    let digits = digits.max(1);
    let sci = format!("{:.*e}", digits - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if exp < -4 || exp >= digits as i32 {
        format!("{}e{}", trim_zeros(mantissa), exp)
    } else {
        let decimals = (digits as i32 - 1 - exp).max(0) as usize;
        trim_zeros(&format!("{:.*}", decimals, x)).to_string()
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

pub fn num(x: f64) -> String {
    fmt_sig(x, SIGNIFICANT_DIGITS)
}

pub fn write_csv_block(out: &mut dyn Write, table: &SweepTable) -> io::Result<()> {
    writeln!(out, "{CSV_HEADER}")?;
    for row in &table.rows {
        writeln!(
            out,
            "{},{},{},{},{},{}",
            num(row.coordinate),
            num(row.s123),
            num(row.s231),
            num(row.s312),
            u8::from(row.entangled),
            row.variant
        )?;
    }
    Ok(())
}

/// One block per table; blocks after the first are introduced by a
/// `# variant: <name>` comment line.
pub fn write_csv(out: &mut dyn Write, tables: &[SweepTable]) -> io::Result<()> {
    for (i, table) in tables.iter().enumerate() {
        if i > 0 {
            writeln!(out, "# variant: {}", table.variant)?;
        }
        write_csv_block(out, table)?;
    }
    Ok(())
}

pub struct CoeffDump<'a> {
    pub params: &'a SystemParams,
    pub omega_prime: f64,
    pub basis: &'a DressedBasis,
    pub populations: &'a SteadyState,
    pub rates: &'a RateSet,
    pub coeffs: &'a CoeffMatrices,
    pub transfer: &'a TransferMatrix,
    pub route: &'a str,
    /// Largest entrywise relative difference between the two transfer routes.
    pub route_discrepancy: f64,
}

pub fn write_coeff_dump(out: &mut dyn Write, dump: &CoeffDump<'_>) -> io::Result<()> {
    let kv = |out: &mut dyn Write, k: &str, v: f64| writeln!(out, "{k} = {}", num(v));
    let p = dump.params;
    writeln!(out, "[params]")?;
    kv(out, "omega_rabi", p.omega_rabi)?;
    kv(out, "delta", p.delta)?;
    kv(out, "gamma", p.gamma)?;
    kv(out, "kappa", p.kappa)?;
    kv(out, "g2n", p.g2n)?;
    kv(out, "wprime", dump.omega_prime)?;

    let b = dump.basis;
    writeln!(out, "\n[dressed_basis]")?;
    for (k, v) in [
        ("d", b.d),
        ("c", b.c),
        ("s", b.s),
        ("c1", b.c1),
        ("c2", b.c2),
        ("c3", b.c3),
        ("cavity_detuning", b.cavity_detuning),
    ] {
        kv(out, k, v)?;
    }

    let st = dump.populations;
    writeln!(out, "\n[steady_state]")?;
    kv(out, "rho00", st.rho00)?;
    kv(out, "rhopp", st.rhopp)?;
    kv(out, "rhomm", st.rhomm)?;

    let r = dump.rates;
    writeln!(out, "\n[rates]")?;
    for (k, v) in [
        ("gpm", r.gpm),
        ("gp0", r.gp0),
        ("g0p", r.g0p),
        ("gc", r.gc),
        ("gph0p", r.gph0p),
        ("gphpm", r.gphpm),
        ("big_gamma", r.big_gamma),
        ("e1", r.e1),
        ("e2", r.e2),
        ("e3", r.e3),
        ("e4", r.e4),
    ] {
        kv(out, k, v)?;
    }

    for (name, m) in [("A", &dump.coeffs.a), ("B", &dump.coeffs.b)] {
        writeln!(out, "\n[{name}]")?;
        for (j, row) in m.iter().enumerate() {
            for (k, v) in row.iter().enumerate() {
                kv(out, &format!("{name}{}{}", j + 1, k + 1), *v)?;
            }
        }
    }

    writeln!(out, "\n[D]")?;
    writeln!(out, "# entries as real imag")?;
    writeln!(out, "route = {}", dump.route)?;
    kv(out, "route_discrepancy", dump.route_discrepancy)?;
    for j in 0..3 {
        for k in 0..3 {
            let z: Complex64 = dump.transfer.get(j, k);
            writeln!(out, "D{}{} = {} {}", j + 1, k + 1, num(z.re), num(z.im))?;
        }
    }
    Ok(())
}
