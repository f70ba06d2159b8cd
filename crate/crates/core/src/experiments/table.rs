//! CSV output.
//!
//! Sweep table header:
//! `sigma,epsilon,replicate,seed,mean_R_raw,mean_R_normalized,negative_amplitude_flag,status`.
//! Floats use Rust's shortest round-trip formatting; `status` is `ok` or
//! `failed: <reason>`. Lines end in `\n`.

use std::io::{Read, Write};

use crate::error::{Error, Result};
use crate::integrate::Trajectory;
use crate::observables::order_series;

use super::{RunStatus, SweepRecord};

pub const SWEEP_HEADER: [&str; 8] = [
    "sigma",
    "epsilon",
    "replicate",
    "seed",
    "mean_R_raw",
    "mean_R_normalized",
    "negative_amplitude_flag",
    "status",
];

fn writer<W: Write>(sink: W) -> csv::Writer<W> {
    csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(sink)
}

fn status_text(status: &RunStatus) -> String {
    match status {
        RunStatus::Ok => "ok".into(),
        RunStatus::Failed(reason) => format!("failed: {reason}"),
    }
}

pub fn write_table<W: Write>(records: &[SweepRecord], sink: W) -> Result<()> {
    let mut w = writer(sink);
    w.write_record(SWEEP_HEADER)?;
    for r in records {
        w.write_record([
            r.sigma.to_string(),
            r.epsilon.to_string(),
            r.replicate.to_string(),
            r.seed.to_string(),
            r.mean_r_raw.to_string(),
            r.mean_r_normalized.to_string(),
            r.negative_amplitude.to_string(),
            status_text(&r.status),
        ])?;
    }
    w.flush()?;
    Ok(())
}

/// Parses a sweep table written by [`write_table`].
pub fn read_table<R: Read>(source: R) -> Result<Vec<SweepRecord>> {
    let mut reader = csv::ReaderBuilder::new().has_headers(true).from_reader(source);
    let header = reader.headers()?.clone();
    if header.iter().ne(SWEEP_HEADER) {
        return Err(Error::Parse {
            line: 1,
            message: format!("unexpected header {:?}", header.iter().collect::<Vec<_>>()),
        });
    }
    let mut out = Vec::new();
    for (k, row) in reader.records().enumerate() {
        let line = k + 2;
        let row = row?;
        let field = |i: usize| row.get(i).unwrap_or("");
        fn parse<T: std::str::FromStr>(s: &str, name: &str, line: usize) -> Result<T> {
            s.parse().map_err(|_| Error::Parse {
                line,
                message: format!("invalid {name} {s:?}"),
            })
        }
        let status = match field(7) {
            "ok" => RunStatus::Ok,
            s => match s.strip_prefix("failed: ") {
                Some(reason) => RunStatus::Failed(reason.to_string()),
                None => {
                    return Err(Error::Parse {
                        line,
                        message: format!("invalid status {s:?}"),
                    })
                }
            },
        };
        out.push(SweepRecord {
            sigma: parse(field(0), "sigma", line)?,
            epsilon: parse(field(1), "epsilon", line)?,
            replicate: parse(field(2), "replicate", line)?,
            seed: parse(field(3), "seed", line)?,
            mean_r_raw: parse(field(4), "mean_R_raw", line)?,
            mean_r_normalized: parse(field(5), "mean_R_normalized", line)?,
            negative_amplitude: parse(field(6), "negative_amplitude_flag", line)?,
            status,
        });
    }
    Ok(out)
}

/// Trajectory table: `t,theta_0..theta_{N-1},r_0..r_{N-1},R_raw,R_normalized`.
pub fn write_trajectory<W: Write>(trajectory: &Trajectory, sink: W) -> Result<()> {
    let n = trajectory.states()[0].n();
    let mut w = writer(sink);
    let mut header = Vec::with_capacity(2 * n + 3);
    header.push("t".to_string());
    header.extend((0..n).map(|i| format!("theta_{i}")));
    header.extend((0..n).map(|i| format!("r_{i}")));
    header.push("R_raw".into());
    header.push("R_normalized".into());
    w.write_record(&header)?;

    let series = order_series(trajectory);
    let mut row = Vec::with_capacity(2 * n + 3);
    for (k, state) in trajectory.states().iter().enumerate() {
        row.clear();
        row.push(series.times[k].to_string());
        row.extend(state.phases().iter().map(|v| v.to_string()));
        row.extend(state.amplitudes().iter().map(|v| v.to_string()));
        row.push(series.raw[k].to_string());
        row.push(series.normalized[k].to_string());
        w.write_record(&row)?;
    }
    w.flush()?;
    Ok(())
}
