//! OEIS b-file fixtures: parsing, comparison, and an opt-in cached fetch.
//!
//! A b-file holds one `n a(n)` pair per line. Lines starting with `#` and
//! blank lines are ignored; LF and CRLF endings are both accepted.
//!
//! Fetched files are cached as `<cache>/<sequence_id>.txt`. The cache
//! directory defaults to `$XDG_CACHE_HOME/kfold-partitions/oeis` (or
//! `~/.cache/...`) and can be overridden with [`CACHE_ENV`].

use std::fs;
use std::io::Read;
use std::path::{Path, PathBuf};

use num_bigint::{BigInt, BigUint};
use thiserror::Error;

use crate::report::{Relation, VerificationReport};
use crate::Count;

/// Environment variable overriding the cache directory.
pub const CACHE_ENV: &str = "KFOLD_OEIS_CACHE";

const BUNDLED_A000009: &str = include_str!("../data/b000009.txt");
const BUNDLED_A087135: &str = include_str!("../data/b087135.txt");

#[derive(Debug, Error)]
pub enum OeisError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("index gap: expected n = {expected}, found n = {found} (line {line})")]
    Gap { expected: i64, found: i64, line: usize },
    #[error("b-file contains no data lines")]
    Empty,
    #[error("fixture {id} covers n = {first}..={last}, but {needed} is required")]
    Coverage { id: String, first: i64, last: i64, needed: i64 },
    #[error("invalid sequence id {0:?}")]
    InvalidId(String),
    #[error("{id} is not cached and network access is disabled")]
    Offline { id: String },
    #[error("network failure fetching {id}: {message}")]
    Transport { id: String, message: String },
    #[error("OEIS has no b-file for {id}")]
    MissingSequence { id: String },
    #[error("cache I/O at {path}: {source}")]
    Cache { path: PathBuf, source: std::io::Error },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Source {
    Bundled,
    Fetched,
}

/// Values of one sequence over a contiguous index range.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SequenceFixture {
    pub sequence_id: String,
    pub offset: i64,
    pub values: Vec<Count>,
    pub source: Source,
}

impl SequenceFixture {
    pub fn last_index(&self) -> i64 {
        self.offset + self.values.len() as i64 - 1
    }

    pub fn get(&self, n: i64) -> Option<&Count> {
        if n < self.offset {
            return None;
        }
        self.values.get((n - self.offset) as usize)
    }

    /// Renders the fixture back to b-file text, one `n a(n)` line each.
    pub fn to_bfile(&self) -> String {
        let mut out = String::new();
        for (i, v) in self.values.iter().enumerate() {
            out.push_str(&format!("{} {}\n", self.offset + i as i64, v));
        }
        out
    }
}

pub fn parse_bfile(sequence_id: &str, text: &str, source: Source) -> Result<SequenceFixture, OeisError> {
    let mut offset = None;
    let mut values = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim_end_matches('\r').trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut fields = line.split_whitespace();
        let (Some(index), Some(value), None) = (fields.next(), fields.next(), fields.next()) else {
            return Err(OeisError::Parse { line: line_no, message: format!("expected `n a(n)`, got {line:?}") });
        };
        let index: i64 = index
            .parse()
            .map_err(|_| OeisError::Parse { line: line_no, message: format!("bad index {index:?}") })?;
        let value: BigUint = value
            .parse()
            .map_err(|_| OeisError::Parse { line: line_no, message: format!("bad value {value:?}") })?;
        let first = *offset.get_or_insert(index);
        let expected = first + values.len() as i64;
        if index != expected {
            return Err(OeisError::Gap { expected, found: index, line: line_no });
        }
        values.push(value);
    }
    let offset = offset.ok_or(OeisError::Empty)?;
    Ok(SequenceFixture { sequence_id: sequence_id.to_string(), offset, values, source })
}

/// Fixtures vendored with the crate: `A000009` (`q(n)`) and `A087135`
/// (`s_2(n) + q(n)`).
pub fn bundled(sequence_id: &str) -> Option<SequenceFixture> {
    let text = match sequence_id {
        "A000009" => BUNDLED_A000009,
        "A087135" => BUNDLED_A087135,
        _ => return None,
    };
    Some(parse_bfile(sequence_id, text, Source::Bundled).expect("bundled b-files are well formed"))
}

/// Checks `fixture(n) == generator(n)` for `n` from the fixture's offset to
/// `n_max`; `lhs` is the fixture value.
pub fn compare<F>(fixture: &SequenceFixture, generator: F, n_max: i64) -> crate::Result<VerificationReport>
where
    F: Fn(i64) -> crate::Result<Count>,
{
    if n_max > fixture.last_index() {
        return Err(OeisError::Coverage {
            id: fixture.sequence_id.clone(),
            first: fixture.offset,
            last: fixture.last_index(),
            needed: n_max,
        }
        .into());
    }
    let mut report =
        VerificationReport::new(format!("{} vs computed", fixture.sequence_id), Relation::Equal, fixture.offset, n_max);
    for n in fixture.offset..=n_max {
        let expected = fixture.get(n).expect("covered").clone();
        report.push(n, BigInt::from(expected), BigInt::from(generator(n)?));
    }
    Ok(report)
}

/// Something that can download a b-file.
pub trait Transport {
    /// `Ok(None)` means the server answered that the file does not exist.
    fn get(&self, url: &str) -> Result<Option<String>, String>;
}

/// Plain HTTPS via `ureq`.
pub struct HttpTransport;

impl Transport for HttpTransport {
    fn get(&self, url: &str) -> Result<Option<String>, String> {
        match ureq::get(url).call() {
            Ok(mut response) => {
                let mut text = String::new();
                response
                    .body_mut()
                    .as_reader()
                    .read_to_string(&mut text)
                    .map_err(|e| e.to_string())?;
                Ok(Some(text))
            }
            Err(ureq::Error::StatusCode(404)) => Ok(None),
            Err(e) => Err(e.to_string()),
        }
    }
}

#[derive(Clone, Debug)]
pub struct FetchPolicy {
    pub allow_network: bool,
    pub cache_dir: PathBuf,
}

impl FetchPolicy {
    /// Network off, cache directory from the environment.
    pub fn offline() -> Self {
        Self { allow_network: false, cache_dir: default_cache_dir() }
    }
}

pub fn default_cache_dir() -> PathBuf {
    if let Some(dir) = std::env::var_os(CACHE_ENV) {
        return PathBuf::from(dir);
    }
    let base = std::env::var_os("XDG_CACHE_HOME")
        .map(PathBuf::from)
        .or_else(|| std::env::var_os("HOME").map(|h| Path::new(&h).join(".cache")))
        .unwrap_or_else(std::env::temp_dir);
    base.join("kfold-partitions").join("oeis")
}

fn check_id(id: &str) -> Result<(), OeisError> {
    let ok = id.len() == 7 && id.starts_with('A') && id[1..].bytes().all(|b| b.is_ascii_digit());
    if ok {
        Ok(())
    } else {
        Err(OeisError::InvalidId(id.to_string()))
    }
}

pub fn bfile_url(id: &str) -> String {
    format!("https://oeis.org/{id}/b{}.txt", &id[1..])
}

pub fn cache_path(cache_dir: &Path, id: &str) -> PathBuf {
    cache_dir.join(format!("{id}.txt"))
}

/// b-file text for `sequence_id`, from the cache when it holds a parseable
/// copy, otherwise downloaded (if allowed) and cached.
pub fn fetch(sequence_id: &str, policy: &FetchPolicy) -> Result<String, OeisError> {
    fetch_with(sequence_id, policy, &HttpTransport)
}

pub fn fetch_with(sequence_id: &str, policy: &FetchPolicy, transport: &dyn Transport) -> Result<String, OeisError> {
    check_id(sequence_id)?;
    let path = cache_path(&policy.cache_dir, sequence_id);
    if let Ok(text) = fs::read_to_string(&path) {
        if parse_bfile(sequence_id, &text, Source::Fetched).is_ok() {
            return Ok(text);
        }
        // Unparseable cache entries are treated as missing.
    }
    if !policy.allow_network {
        return Err(OeisError::Offline { id: sequence_id.to_string() });
    }
    let text = match transport.get(&bfile_url(sequence_id)) {
        Ok(Some(text)) => text,
        Ok(None) => return Err(OeisError::MissingSequence { id: sequence_id.to_string() }),
        Err(message) => return Err(OeisError::Transport { id: sequence_id.to_string(), message }),
    };
    if let Err(e) = parse_bfile(sequence_id, &text, Source::Fetched) {
        return Err(OeisError::Transport { id: sequence_id.to_string(), message: format!("unusable b-file: {e}") });
    }
    let cache_err = |source| OeisError::Cache { path: path.clone(), source };
    fs::create_dir_all(&policy.cache_dir).map_err(cache_err)?;
    // Write then rename, so concurrent writers leave one complete file.
    let tmp = path.with_extension(format!("tmp{}", std::process::id()));
    fs::write(&tmp, &text).map_err(cache_err)?;
    fs::rename(&tmp, &path).map_err(cache_err)?;
    Ok(text)
}

#[cfg(test)]
mod tests {
    use std::cell::Cell;

    use super::*;

    #[test]
    fn parse_examples() {
        let f = parse_bfile("A000009", "0 1\n1 1\n2 1\n3 2", Source::Bundled).unwrap();
        assert_eq!(f.offset, 0);
        assert_eq!(f.values, vec![1u32.into(), 1u32.into(), 1u32.into(), 2u32.into()]);
        let f = parse_bfile("A000009", "# comment\n5 3", Source::Bundled).unwrap();
        assert_eq!((f.offset, f.values.clone()), (5, vec![3u32.into()]));
        let f = parse_bfile("A000009", "0 1\r\n1 1\r\n", Source::Bundled).unwrap();
        assert_eq!(f.last_index(), 1);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(parse_bfile("A", "5 x", Source::Bundled), Err(OeisError::Parse { line: 1, .. })));
        assert!(matches!(parse_bfile("A", "1 1\n2", Source::Bundled), Err(OeisError::Parse { line: 2, .. })));
        assert!(matches!(
            parse_bfile("A", "1 1\n3 2", Source::Bundled),
            Err(OeisError::Gap { expected: 2, found: 3, line: 2 })
        ));
        assert!(matches!(parse_bfile("A", "# only\n", Source::Bundled), Err(OeisError::Empty)));
        assert!(matches!(parse_bfile("A", "1 -1", Source::Bundled), Err(OeisError::Parse { .. })));
    }

    #[test]
    fn bundled_fixtures_load() {
        let q = bundled("A000009").unwrap();
        assert_eq!(q.offset, 0);
        assert!(q.last_index() >= 1000);
        assert!(bundled("A087135").is_some());
        assert!(bundled("A000041").is_none());
    }

    #[test]
    fn compare_requires_coverage() {
        let f = parse_bfile("A000009", "0 1\n1 1", Source::Bundled).unwrap();
        assert!(compare(&f, |_| Ok(1u32.into()), 2).is_err());
        assert!(compare(&f, |_| Ok(1u32.into()), 1).unwrap().passed());
    }

    struct Fake {
        body: Option<String>,
        calls: Cell<usize>,
    }

    impl Transport for Fake {
        fn get(&self, url: &str) -> Result<Option<String>, String> {
            self.calls.set(self.calls.get() + 1);
            assert!(url.ends_with("/A000009/b000009.txt"), "{url}");
            Ok(self.body.clone())
        }
    }

    #[test]
    fn fetch_caches_and_refetches_corrupt_entries() {
        let dir = tempfile::tempdir().unwrap();
        let mut policy = FetchPolicy { allow_network: false, cache_dir: dir.path().to_path_buf() };
        let fake = Fake { body: Some("0 1\n1 1\n".into()), calls: Cell::new(0) };

        assert!(matches!(fetch_with("A000009", &policy, &fake), Err(OeisError::Offline { .. })));
        assert_eq!(fake.calls.get(), 0);

        policy.allow_network = true;
        assert_eq!(fetch_with("A000009", &policy, &fake).unwrap(), "0 1\n1 1\n");
        assert_eq!(fake.calls.get(), 1);

        // Warm cache, even with the network off.
        policy.allow_network = false;
        assert_eq!(fetch_with("A000009", &policy, &fake).unwrap(), "0 1\n1 1\n");
        assert_eq!(fake.calls.get(), 1);

        fs::write(cache_path(dir.path(), "A000009"), "garbage").unwrap();
        assert!(matches!(fetch_with("A000009", &policy, &fake), Err(OeisError::Offline { .. })));
        policy.allow_network = true;
        assert_eq!(fetch_with("A000009", &policy, &fake).unwrap(), "0 1\n1 1\n");
        assert_eq!(fake.calls.get(), 2);
    }

    #[test]
    fn fetch_distinguishes_missing_from_transport() {
        let dir = tempfile::tempdir().unwrap();
        let policy = FetchPolicy { allow_network: true, cache_dir: dir.path().to_path_buf() };
        let missing = Fake { body: None, calls: Cell::new(0) };
        assert!(matches!(fetch_with("A000009", &policy, &missing), Err(OeisError::MissingSequence { .. })));

        struct Down;
        impl Transport for Down {
            fn get(&self, _: &str) -> Result<Option<String>, String> {
                Err("connection refused".into())
            }
        }
        assert!(matches!(fetch_with("A000009", &policy, &Down), Err(OeisError::Transport { .. })));
        assert!(matches!(fetch_with("B12", &policy, &Down), Err(OeisError::InvalidId(_))));
    }
}
