//! Output rendering: plain tables, CSV with a fixed column order, and
//! standalone LaTeX documents (no packages beyond `article`).

use checkerboard::factorize::Factorization;

/// Wrap math content in a minimal standalone document.
pub fn latex_math_doc(lines: &[String]) -> String {
    let mut out = String::from("\\documentclass{article}\n\\begin{document}\n");
    for line in lines {
        out.push_str("\\[ ");
        out.push_str(line);
        out.push_str(" \\]\n");
    }
    out.push_str("\\end{document}\n");
    out
}

/// Wrap a tabular in a minimal standalone document.
pub fn latex_table_doc(headers: &[&str], rows: &[Vec<String>]) -> String {
    let mut out = String::from("\\documentclass{article}\n\\begin{document}\n");
    out.push_str(&format!(
        "\\begin{{tabular}}{{{}}}\n",
        "l".repeat(headers.len())
    ));
    out.push_str(&headers.iter().map(|h| latex_escape(h)).collect::<Vec<_>>().join(" & "));
    out.push_str(" \\\\\n\\hline\n");
    for row in rows {
        out.push_str(&row.iter().map(|c| latex_escape(c)).collect::<Vec<_>>().join(" & "));
        out.push_str(" \\\\\n");
    }
    out.push_str("\\end{tabular}\n\\end{document}\n");
    out
}

/// Escape the characters LaTeX treats specially in text mode.
pub fn latex_escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for ch in s.chars() {
        match ch {
            '#' | '$' | '%' | '&' | '_' | '{' | '}' => {
                out.push('\\');
                out.push(ch);
            }
            '^' => out.push_str("\\^{}"),
            '~' => out.push_str("\\~{}"),
            '\\' => out.push_str("\\textbackslash{}"),
            _ => out.push(ch),
        }
    }
    out
}

/// Turn the plain `Display` form of a polynomial or factorization into LaTeX
/// math: brace every exponent and use \cdot for products. The plain forms
/// only contain digits, letters, whitespace, and `+ - * ^ ( ) =`.
pub fn mathify(plain: &str) -> String {
    let mut out = String::with_capacity(plain.len() + 8);
    let mut chars = plain.chars().peekable();
    while let Some(ch) = chars.next() {
        match ch {
            '^' => {
                out.push_str("^{");
                while chars.peek().is_some_and(|c| c.is_ascii_digit()) {
                    out.push(chars.next().unwrap());
                }
                out.push('}');
            }
            '*' => out.push_str("\\cdot"),
            _ => out.push(ch),
        }
    }
    out
}

/// `count = p1^e1 * p2^e2 * ...` in math form.
pub fn factored_math(value: &num_bigint::BigInt, f: &Factorization) -> String {
    mathify(&format!("{value} = {f}"))
}

/// Fixed-width plain-text table.
pub fn table_plain(headers: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = headers.iter().map(|h| h.len()).collect();
    for row in rows {
        for (i, cell) in row.iter().enumerate() {
            widths[i] = widths[i].max(cell.len());
        }
    }
    let mut out = String::new();
    let emit = |out: &mut String, cells: &[String]| {
        let line = cells
            .iter()
            .enumerate()
            .map(|(i, c)| format!("{:<w$}", c, w = widths[i]))
            .collect::<Vec<_>>()
            .join("  ");
        out.push_str(line.trim_end());
        out.push('\n');
    };
    emit(&mut out, &headers.iter().map(|s| s.to_string()).collect::<Vec<_>>());
    for row in rows {
        emit(&mut out, row);
    }
    out
}

/// CSV with minimal quoting (fields containing commas or quotes are quoted).
pub fn table_csv(headers: &[&str], rows: &[Vec<String>]) -> String {
    let field = |s: &str| -> String {
        if s.contains(',') || s.contains('"') || s.contains('\n') {
            format!("\"{}\"", s.replace('"', "\"\""))
        } else {
            s.to_string()
        }
    };
    let mut out = headers.iter().map(|h| field(h)).collect::<Vec<_>>().join(",");
    out.push('\n');
    for row in rows {
        out.push_str(&row.iter().map(|c| field(c)).collect::<Vec<_>>().join(","));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mathify_braces_exponents() {
        assert_eq!(mathify("x^13 - 2x^5"), "x^{13} - 2x^{5}");
        assert_eq!(mathify("2^32 * 3^7 * 5"), "2^{32} \\cdot 3^{7} \\cdot 5");
    }

    #[test]
    fn escape_covers_specials() {
        assert_eq!(latex_escape("det_mod2 = 1"), "det\\_mod2 = 1");
        assert_eq!(latex_escape("x^0"), "x\\^{}0");
    }

    #[test]
    fn csv_quotes_commas() {
        let out = table_csv(&["a", "b"], &[vec!["x,y".into(), "z".into()]]);
        assert_eq!(out, "a,b\n\"x,y\",z\n");
    }

    #[test]
    fn plain_table_aligns() {
        let out = table_plain(&["mm", "n"], &[vec!["3".into(), "10".into()]]);
        assert_eq!(out, "mm  n\n3   10\n");
    }
}
