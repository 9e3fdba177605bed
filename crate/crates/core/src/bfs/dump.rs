//! Binary dump of a [`DistanceTable`]:
//!
//! ```text
//! offset  size  field
//! 0       4     magic "LRXD"
//! 4       4     version (u32 LE) = 1
//! 8       4     n (u32 LE)
//! 12      8     rank of the source (u64 LE)
//! 20      n!    distances, one byte per rank
//! ```

use std::fs::File;
use std::io::{BufWriter, Read, Write};
use std::path::Path;

use super::{DistanceTable, MAX_BFS_DEGREE, UNREACHED};
use crate::error::{Error, Result};
use crate::perm::{factorial, rank, unrank};

pub const TABLE_MAGIC: [u8; 4] = *b"LRXD";
pub const TABLE_VERSION: u32 = 1;
const HEADER_LEN: usize = 20;

fn io_err(path: &Path) -> impl FnOnce(std::io::Error) -> Error + '_ {
    move |source| Error::Io {
        path: path.to_path_buf(),
        source,
    }
}

impl DistanceTable {
    pub fn write_to<W: Write>(&self, mut out: W) -> std::io::Result<()> {
        out.write_all(&TABLE_MAGIC)?;
        out.write_all(&TABLE_VERSION.to_le_bytes())?;
        out.write_all(&(self.n as u32).to_le_bytes())?;
        let source_rank = rank(&self.source).expect("table degree fits rank");
        out.write_all(&source_rank.to_le_bytes())?;
        out.write_all(&self.dist)?;
        out.flush()
    }

    pub fn to_bytes(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(HEADER_LEN + self.dist.len());
        self.write_to(&mut out)
            .expect("writing to a Vec cannot fail");
        out
    }

    /// Parses a dump, checking the header, the exact payload length, that the
    /// source sits at distance 0 and that no entry is unreached.
    pub fn from_bytes(bytes: &[u8]) -> Result<Self> {
        let bad = |msg: String| Error::BadTable(msg);
        if bytes.len() < HEADER_LEN {
            return Err(bad(format!(
                "{} bytes is shorter than the header",
                bytes.len()
            )));
        }
        if bytes[0..4] != TABLE_MAGIC {
            return Err(bad("bad magic".into()));
        }
        let version = u32::from_le_bytes(bytes[4..8].try_into().unwrap());
        if version != TABLE_VERSION {
            return Err(bad(format!("unsupported version {version}")));
        }
        let n = u32::from_le_bytes(bytes[8..12].try_into().unwrap()) as usize;
        if n == 0 || n > MAX_BFS_DEGREE {
            return Err(bad(format!("degree {n} outside 1..={MAX_BFS_DEGREE}")));
        }
        let states = factorial(n).unwrap();
        let source_rank = u64::from_le_bytes(bytes[12..20].try_into().unwrap());
        if source_rank >= states {
            return Err(bad(format!("source rank {source_rank} >= {n}!")));
        }
        let payload = &bytes[HEADER_LEN..];
        if payload.len() as u64 != states {
            return Err(bad(format!(
                "payload has {} bytes, expected {states}",
                payload.len()
            )));
        }
        if payload[source_rank as usize] != 0 {
            return Err(bad("source is not at distance 0".into()));
        }
        if payload.contains(&UNREACHED) {
            return Err(bad("table has unreached entries".into()));
        }
        let source = unrank(n, source_rank)?;
        Ok(DistanceTable::from_parts(n, source, payload.to_vec()))
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        let file = File::create(path).map_err(io_err(path))?;
        self.write_to(BufWriter::new(file)).map_err(io_err(path))
    }

    pub fn load(path: &Path) -> Result<Self> {
        let mut bytes = Vec::new();
        File::open(path)
            .and_then(|mut f| f.read_to_end(&mut bytes))
            .map_err(io_err(path))?;
        DistanceTable::from_bytes(&bytes)
    }
}
