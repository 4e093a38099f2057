//! Rendering of bijection tables.
//!
//! The text layout keeps rows grouped by source class, with a dashed rule
//! between groups. When a published example exists for the same map and
//! parameters, rows it lacks are marked `*` and explained in a footnote.

use std::collections::BTreeSet;
use std::io::Write;

use crate::bijection::{BijectionRow, MapName};
use crate::error::Result;
use crate::partition::ClassTag;
use crate::published;

/// Column headings, e.g. `("D(10)", "S_2(8)")`.
pub fn headings(map: MapName, n: u64, k: usize) -> Result<(String, String)> {
    let (target, m) = map.target(n, k)?;
    let source = match map {
        MapName::L => format!("{}({n}) u {}({n})", ClassTag::largest(k)?, ClassTag::largest(k - 1)?),
        _ => map.source_name(n),
    };
    Ok((source, format!("{target}({m})")))
}

/// Class-grouped plain-text table.
pub fn render_text(map: MapName, n: u64, k: usize, rows: &[BijectionRow]) -> Result<String> {
    let (src_head, img_head) = headings(map, n, k)?;
    let printed = published::table(&map.to_string(), n, k);
    let printed_rows: BTreeSet<(Vec<u64>, Vec<u64>)> = printed
        .map(|t| t.rows.iter().map(|(s, i)| (s.to_vec(), i.to_vec())).collect())
        .unwrap_or_default();

    let sources: Vec<String> = rows.iter().map(|r| r.source.to_string()).collect();
    let width = sources.iter().map(String::len).chain([src_head.len()]).max().unwrap_or(0);
    let images: Vec<String> = rows.iter().map(|r| r.image.to_string()).collect();
    let img_width = images.iter().map(String::len).chain([img_head.len()]).max().unwrap_or(0);

    let mut out = String::new();
    out.push_str(&format!("{src_head:<width$} | {img_head}\n"));
    out.push_str(&format!("{}-+-{}\n", "-".repeat(width), "-".repeat(img_width)));
    let mut missing = 0;
    for (i, row) in rows.iter().enumerate() {
        if i > 0 && rows[i - 1].source_class != row.source_class {
            out.push_str(&format!("{:<width$} |\n", "- ".repeat(width.div_ceil(2)).trim_end()));
        }
        let key = (row.source.parts().to_vec(), row.image.parts().to_vec());
        let mark = if printed.is_some() && !printed_rows.contains(&key) {
            missing += 1;
            "  *"
        } else {
            ""
        };
        let line = format!("{:<width$} | {}{mark}", sources[i], images[i]);
        out.push_str(line.trim_end());
        out.push('\n');
    }
    if let Some(t) = printed {
        if missing > 0 {
            out.push_str(&format!(
                "\n* not in the published {} ({} published rows, {} complete rows)\n",
                t.label,
                t.rows.len(),
                rows.len()
            ));
        }
    }
    Ok(out)
}

pub fn write_csv<W: Write>(out: W, rows: &[BijectionRow]) -> Result<()> {
    let mut writer = csv::Writer::from_writer(out);
    writer.write_record(["source", "source_class", "image", "image_class"])?;
    for r in rows {
        writer.write_record([
            r.source.to_string(),
            r.source_class.to_string(),
            r.image.to_string(),
            r.image_class.to_string(),
        ])?;
    }
    writer.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bijection::bijection_table;

    #[test]
    fn headings_name_both_sides() {
        assert_eq!(headings(MapName::D, 10, 3).unwrap(), ("D(10)".into(), "S_2(8)".into()));
        assert_eq!(headings(MapName::A, 9, 2).unwrap(), ("A(9)".into(), "Q(8)".into()));
        assert_eq!(headings(MapName::L, 12, 3).unwrap(), ("L_3(12) u L_2(12)".into(), "L_2(14)".into()));
    }

    #[test]
    fn missing_published_rows_are_marked() {
        let rows = bijection_table(MapName::D, 10, 3).unwrap();
        let text = render_text(MapName::D, 10, 3, &rows).unwrap();
        assert!(text.contains("(5,5)     | (4,4)  *"), "{text}");
        assert!(text.contains("3 published rows, 4 complete rows"));
        let rows = bijection_table(MapName::C, 10, 3).unwrap();
        assert!(!render_text(MapName::C, 10, 3, &rows).unwrap().contains('*'));
    }

    #[test]
    fn csv_columns() {
        let rows = bijection_table(MapName::L, 12, 3).unwrap();
        let mut buf = Vec::new();
        write_csv(&mut buf, &rows).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let mut lines = text.lines();
        assert_eq!(lines.next(), Some("source,source_class,image,image_class"));
        assert_eq!(lines.next(), Some("\"(4,4,4)\",L_3,\"(5,5,4)\",L_2"));
    }
}
