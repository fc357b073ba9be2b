//! Small helpers for the bracket-list text grammar shared by field
//! elements, polynomials, matrices and reports.

/// Strips one layer of `[ ... ]` from a trimmed string.
pub fn strip_brackets(s: &str) -> Option<&str> {
    let s = s.trim();
    if s.len() >= 2 && s.starts_with('[') && s.ends_with(']') {
        Some(&s[1..s.len() - 1])
    } else {
        None
    }
}

/// Splits on commas at bracket depth zero. Returns an empty vector for a
/// blank string, so `[]` parses as an empty list.
pub fn split_top_level(s: &str) -> Result<Vec<&str>, String> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    let mut parts = Vec::new();
    let mut depth: i32 = 0;
    let mut start = 0;
    for (i, ch) in s.char_indices() {
        match ch {
            '[' => depth += 1,
            ']' => {
                depth -= 1;
                if depth < 0 {
                    return Err("unbalanced ']'".to_string());
                }
            }
            ',' if depth == 0 => {
                parts.push(s[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    if depth != 0 {
        return Err("unbalanced '['".to_string());
    }
    parts.push(s[start..].trim());
    Ok(parts)
}
