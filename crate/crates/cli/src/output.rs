use serde::Serialize;
use serde_json::{json, Value};

use crate::args::Format;

pub const FORMAT_VERSION: u32 = 1;

/// A rectangular view of a result, rendered as aligned text or TSV.
#[derive(Debug, Default, Clone)]
pub struct Table {
    pub title: Option<String>,
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(header: &[&str]) -> Self {
        Table {
            title: None,
            header: header.iter().map(|h| h.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn titled(mut self, title: impl Into<String>) -> Self {
        self.title = Some(title.into());
        self
    }

    pub fn row(&mut self, cells: Vec<String>) {
        self.rows.push(cells);
    }

    pub fn fields(pairs: Vec<(&str, String)>) -> Self {
        let mut t = Table::new(&["field", "value"]);
        for (k, v) in pairs {
            t.row(vec![k.to_string(), v]);
        }
        t
    }

    pub fn to_text(&self) -> String {
        let mut widths: Vec<usize> = self.header.iter().map(String::len).collect();
        for r in &self.rows {
            for (w, c) in widths.iter_mut().zip(r) {
                *w = (*w).max(c.chars().count());
            }
        }
        let line = |cells: &[String]| {
            let padded: Vec<String> = cells
                .iter()
                .zip(&widths)
                .map(|(c, w)| format!("{c:<w$}"))
                .collect();
            padded.join("  ").trim_end().to_string() + "\n"
        };
        let mut out = String::new();
        if let Some(t) = &self.title {
            out += &format!("# {t}\n");
        }
        out += &line(&self.header);
        for r in &self.rows {
            out += &line(r);
        }
        out
    }

    pub fn to_tsv(&self) -> String {
        let mut out = self.header.join("\t") + "\n";
        for r in &self.rows {
            out += &(r.join("\t") + "\n");
        }
        out
    }
}

pub enum Output {
    Report {
        command: &'static str,
        result: Value,
        table: Table,
    },
    /// A header object followed by one JSON record per line.
    Lines {
        command: &'static str,
        header: Value,
        lines: Vec<Value>,
        table: Table,
    },
    Svg(String),
}

pub fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("reports serialize")
}

impl Output {
    pub fn render(&self, format: Format) -> String {
        match (self, format) {
            (Output::Svg(s), _) => s.clone(),
            (
                Output::Report {
                    command, result, ..
                },
                Format::Json,
            ) => {
                let env =
                    json!({"format_version": FORMAT_VERSION, "command": command, "result": result});
                serde_json::to_string_pretty(&env).expect("json") + "\n"
            }
            (
                Output::Lines {
                    command,
                    header,
                    lines,
                    ..
                },
                Format::Json,
            ) => {
                let mut head = json!({"format_version": FORMAT_VERSION, "command": command});
                if let (Some(h), Value::Object(extra)) = (head.as_object_mut(), header) {
                    h.extend(extra.clone());
                }
                let mut out = serde_json::to_string(&head).expect("json") + "\n";
                for l in lines {
                    out += &(serde_json::to_string(l).expect("json") + "\n");
                }
                out
            }
            (Output::Report { table, .. } | Output::Lines { table, .. }, Format::Text) => {
                table.to_text()
            }
            (Output::Report { table, .. } | Output::Lines { table, .. }, Format::Tsv) => {
                table.to_tsv()
            }
        }
    }
}
