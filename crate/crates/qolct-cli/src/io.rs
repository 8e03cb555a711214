//! Signal ingestion, coefficient persistence, and image export.
//!
//! Field CSV: header-free rows `m1, m2, w, x, y, z` covering every lattice
//! site exactly once. PNG input: 8-bit RGB, (R, G, B) → (x, y, z) scaled to
//! [0, 1] with zero scalar part. Coefficient files use the QWOL container
//! described in `TensorWriter`.

use qolct::{CoeffTensor, FreqGrid, OlctParams};
use quatfield::{GridSpec, QField, Quaternion};
use std::fs::File;
use std::io::{BufWriter, Write as _};
use std::path::Path;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum IoError {
    #[error("malformed input: {0}")]
    MalformedInput(String),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: String, got: String },
    #[error("corrupt tensor: {0}")]
    CorruptTensor(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("image: {0}")]
    Image(#[from] image::ImageError),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
}

/// Loads a sampled field from CSV or PNG, dispatched on the file extension.
pub fn ingest(path: &Path, grid: GridSpec) -> Result<QField, IoError> {
    let ext = path
        .extension()
        .and_then(|e| e.to_str())
        .map(|e| e.to_ascii_lowercase())
        .unwrap_or_default();
    match ext.as_str() {
        "csv" => read_field_csv(path, grid),
        "png" => read_field_png(path, grid),
        other => Err(IoError::MalformedInput(format!(
            "unsupported input extension `{other}` (expected csv or png)"
        ))),
    }
}

pub fn read_field_csv(path: &Path, grid: GridSpec) -> Result<QField, IoError> {
    let mut rdr = csv::ReaderBuilder::new().has_headers(false).from_path(path)?;
    let mut f = QField::zero(grid);
    let mut seen = vec![false; grid.len()];
    for row in rdr.deserialize() {
        let (m1, m2, w, x, y, z): (usize, usize, f64, f64, f64, f64) = row?;
        if m1 >= grid.n1 || m2 >= grid.n2 {
            return Err(IoError::DimensionMismatch {
                expected: format!("{}x{}", grid.n1, grid.n2),
                got: format!("sample index ({m1}, {m2})"),
            });
        }
        let idx = grid.index(m1, m2);
        if seen[idx] {
            return Err(IoError::MalformedInput(format!("duplicate sample ({m1}, {m2})")));
        }
        seen[idx] = true;
        f.samples[idx] = Quaternion::new(w, x, y, z);
    }
    let missing = seen.iter().filter(|&&s| !s).count();
    if missing > 0 {
        return Err(IoError::MalformedInput(format!("{missing} lattice sites have no sample")));
    }
    Ok(f)
}

pub fn write_field_csv(path: &Path, f: &QField) -> Result<(), IoError> {
    let mut w = csv::Writer::from_path(path)?;
    for m1 in 0..f.grid.n1 {
        for m2 in 0..f.grid.n2 {
            let q = f.samples[f.grid.index(m1, m2)];
            w.serialize((m1, m2, q.w, q.x, q.y, q.z))?;
        }
    }
    w.flush()?;
    Ok(())
}

pub fn read_field_png(path: &Path, grid: GridSpec) -> Result<QField, IoError> {
    let img = image::open(path)?.to_rgb8();
    if img.height() as usize != grid.n1 || img.width() as usize != grid.n2 {
        return Err(IoError::DimensionMismatch {
            expected: format!("{}x{}", grid.n1, grid.n2),
            got: format!("{}x{}", img.height(), img.width()),
        });
    }
    let mut f = QField::zero(grid);
    for m1 in 0..grid.n1 {
        for m2 in 0..grid.n2 {
            let p = img.get_pixel(m2 as u32, m1 as u32);
            f.samples[grid.index(m1, m2)] = Quaternion::new(
                0.0,
                p[0] as f64 / 255.0,
                p[1] as f64 / 255.0,
                p[2] as f64 / 255.0,
            );
        }
    }
    Ok(f)
}

/// Writes magnitudes as an 8-bit RGB image scaled to the per-image maximum
/// and returns that maximum so callers can record it in a sidecar.
pub fn write_magnitude_png(
    path: &Path,
    rows: usize,
    cols: usize,
    mags: &[f64],
) -> Result<f64, IoError> {
    assert_eq!(mags.len(), rows * cols);
    let max = mags.iter().fold(0.0f64, |m, &v| m.max(v));
    let mut img = image::RgbImage::new(cols as u32, rows as u32);
    if max > 0.0 {
        for r in 0..rows {
            for c in 0..cols {
                let v = (255.0 * mags[r * cols + c] / max).round() as u8;
                img.put_pixel(c as u32, r as u32, image::Rgb([v, v, v]));
            }
        }
    }
    img.save(path)?;
    Ok(max)
}

const MAGIC: [u8; 4] = *b"QWOL";
const VERSION: u32 = 1;
const HEADER_F64S: usize = 20;

/// Streaming writer for the QWOL coefficient container: magic "QWOL", u32
/// version, u32 dims (n_u1, n_u2, n_w1, n_w2), u32 aligned flag, then 20
/// little-endian f64s (u-grid dt/origin, frequency-grid dw/origin, both
/// parameter sextets) and the payload quaternions (w, x, y, z) row-major
/// with u outermost.
pub struct TensorWriter {
    out: BufWriter<File>,
    slices: usize,
    wlen: usize,
    written: usize,
}

impl TensorWriter {
    pub fn create(
        path: &Path,
        ugrid: GridSpec,
        wgrid: FreqGrid,
        p1: &OlctParams,
        p2: &OlctParams,
    ) -> Result<TensorWriter, IoError> {
        let mut out = BufWriter::new(File::create(path)?);
        out.write_all(&MAGIC)?;
        for v in [
            VERSION,
            ugrid.n1 as u32,
            ugrid.n2 as u32,
            wgrid.n1 as u32,
            wgrid.n2 as u32,
            wgrid.aligned as u32,
        ] {
            out.write_all(&v.to_le_bytes())?;
        }
        let fields = [
            ugrid.dt1, ugrid.dt2, ugrid.origin1, ugrid.origin2,
            wgrid.dw1, wgrid.dw2, wgrid.origin1, wgrid.origin2,
            p1.a, p1.b, p1.c, p1.d, p1.p, p1.q,
            p2.a, p2.b, p2.c, p2.d, p2.p, p2.q,
        ];
        for v in fields {
            out.write_all(&v.to_le_bytes())?;
        }
        Ok(TensorWriter { out, slices: ugrid.len(), wlen: wgrid.len(), written: 0 })
    }

    pub fn push_slice(&mut self, samples: &[Quaternion]) -> Result<(), IoError> {
        assert_eq!(samples.len(), self.wlen, "slice length must match the frequency grid");
        for q in samples {
            for v in [q.w, q.x, q.y, q.z] {
                self.out.write_all(&v.to_le_bytes())?;
            }
        }
        self.written += 1;
        Ok(())
    }

    pub fn finish(mut self) -> Result<(), IoError> {
        assert_eq!(self.written, self.slices, "tensor writer closed early");
        self.out.flush()?;
        Ok(())
    }
}

pub fn write_tensor(
    path: &Path,
    c: &CoeffTensor,
    p1: &OlctParams,
    p2: &OlctParams,
) -> Result<(), IoError> {
    let mut w = TensorWriter::create(path, c.ugrid, c.wgrid, p1, p2)?;
    for iu1 in 0..c.ugrid.n1 {
        for iu2 in 0..c.ugrid.n2 {
            w.push_slice(c.u_slice(iu1, iu2))?;
        }
    }
    w.finish()
}

pub fn read_tensor(path: &Path) -> Result<(CoeffTensor, OlctParams, OlctParams), IoError> {
    let bytes = std::fs::read(path)?;
    let corrupt = |msg: &str| IoError::CorruptTensor(format!("{}: {msg}", path.display()));
    if bytes.len() < 4 || bytes[..4] != MAGIC {
        return Err(corrupt("bad magic"));
    }
    let u32_at = |off: usize| {
        u32::from_le_bytes(bytes[off..off + 4].try_into().unwrap()) as usize
    };
    let header = 4 + 6 * 4 + HEADER_F64S * 8;
    if bytes.len() < header {
        return Err(corrupt("truncated header"));
    }
    let version = u32_at(4);
    if version != VERSION as usize {
        return Err(corrupt(&format!("unsupported version {version}")));
    }
    let (n_u1, n_u2, n_w1, n_w2) = (u32_at(8), u32_at(12), u32_at(16), u32_at(20));
    let aligned = match u32_at(24) {
        0 => false,
        1 => true,
        other => return Err(corrupt(&format!("bad aligned flag {other}"))),
    };
    if n_u1 == 0 || n_u2 == 0 || n_w1 == 0 || n_w2 == 0 {
        return Err(corrupt("zero-sized axis"));
    }
    let mut fs = [0.0f64; HEADER_F64S];
    for (i, v) in fs.iter_mut().enumerate() {
        let off = 28 + i * 8;
        *v = f64::from_le_bytes(bytes[off..off + 8].try_into().unwrap());
    }
    let count = n_u1 * n_u2 * n_w1 * n_w2;
    if bytes.len() != header + count * 32 {
        return Err(corrupt(&format!(
            "payload holds {} bytes, dims need {}",
            bytes.len() - header,
            count * 32
        )));
    }
    let ugrid = GridSpec {
        n1: n_u1,
        n2: n_u2,
        dt1: fs[0],
        dt2: fs[1],
        origin1: fs[2],
        origin2: fs[3],
    };
    let wgrid = FreqGrid {
        n1: n_w1,
        n2: n_w2,
        dw1: fs[4],
        dw2: fs[5],
        origin1: fs[6],
        origin2: fs[7],
        aligned,
    };
    let par = |o: usize, axis: &str| {
        OlctParams::new(fs[o], fs[o + 1], fs[o + 2], fs[o + 3], fs[o + 4], fs[o + 5])
            .map_err(|e| corrupt(&format!("{axis} parameter block: {e}")))
    };
    let p1 = par(8, "first-axis")?;
    let p2 = par(14, "second-axis")?;
    let mut samples = Vec::with_capacity(count);
    for i in 0..count {
        let off = header + i * 32;
        let f = |k: usize| {
            f64::from_le_bytes(bytes[off + k * 8..off + (k + 1) * 8].try_into().unwrap())
        };
        samples.push(Quaternion::new(f(0), f(1), f(2), f(3)));
    }
    Ok((CoeffTensor { ugrid, wgrid, samples }, p1, p2))
}

pub fn write_json(path: &Path, value: &impl serde::Serialize) -> Result<(), IoError> {
    let mut text = serde_json::to_string_pretty(value)
        .map_err(|e| IoError::MalformedInput(e.to_string()))?;
    text.push('\n');
    std::fs::write(path, text)?;
    Ok(())
}
