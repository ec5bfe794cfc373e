use extcalc::{AdmissibleGroup, GradedGroup};

/// ASCII form, accepted back by [`crate::parse_group`].
pub fn group_text(g: &AdmissibleGroup) -> String {
    g.to_string()
}

/// ASCII form, accepted back by [`crate::parse_graded`].
pub fn graded_text(k: &GradedGroup) -> String {
    k.to_string()
}

/// Swap the ASCII spellings of `⊕` and `∞` for the Unicode ones.
pub(crate) fn unicode(text: &str) -> String {
    let text = text.replace("^oo", "^∞").replace(" + ", " ⊕ ");
    let mut out = String::with_capacity(text.len());
    let mut word = String::new();
    let flush = |word: &mut String, out: &mut String| {
        out.push_str(if word == "inf" { "∞" } else { word });
        word.clear();
    };
    for c in text.chars() {
        if c.is_alphanumeric() || c == '_' {
            word.push(c);
        } else {
            flush(&mut word, &mut out);
            out.push(c);
        }
    }
    flush(&mut word, &mut out);
    out
}
