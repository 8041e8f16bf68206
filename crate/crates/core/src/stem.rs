//! Rule-based suffix stripping for Portuguese, in the style of the RSLP
//! stemmer: plural → feminine → adverb → augmentative → noun suffix →
//! (verb suffix | final vowel) → accent removal. Each step applies its
//! first matching rule (rules are ordered longest first) provided the
//! remaining stem keeps a minimum length.

use unicode_normalization::UnicodeNormalization;

/// Something that maps a word to a stem.
pub trait Stemmer: Send + Sync {
    fn stem(&self, word: &str) -> String;
}

/// Suffix, minimum stem length, replacement.
type Rule = (&'static str, usize, &'static str);

const PLURAL: &[Rule] = &[
    ("ns", 1, "m"),
    ("ões", 3, "ão"),
    ("ães", 1, "ão"),
    ("ais", 1, "al"),
    ("éis", 2, "el"),
    ("eis", 2, "el"),
    ("óis", 2, "ol"),
    ("les", 3, "l"),
    ("res", 3, "r"),
    ("s", 2, ""),
];

const PLURAL_EXCEPTIONS: &[&str] = &["lápis", "cais", "mais", "crúcis", "biquínis", "pois", "depois", "dois", "leis", "ônibus", "vírus", "atlas", "tênis", "país", "lilás", "após", "três", "mês", "gás", "vez"];

const FEMININE: &[Rule] = &[
    ("eira", 3, "eiro"),
    ("inha", 3, "inho"),
    ("ona", 3, "ão"),
    ("ora", 3, "or"),
    ("osa", 3, "oso"),
    ("esa", 3, "ês"),
    ("ica", 3, "ico"),
    ("ada", 2, "ado"),
    ("ida", 3, "ido"),
    ("ída", 3, "ido"),
    ("ima", 3, "imo"),
    ("iva", 3, "ivo"),
    ("na", 4, "no"),
];

const ADVERB: &[Rule] = &[("mente", 4, "")];

const AUGMENTATIVE: &[Rule] = &[
    ("íssimo", 3, ""),
    ("érrimo", 4, ""),
    ("zinho", 2, ""),
    ("zinha", 2, ""),
    ("inho", 3, ""),
    ("zão", 2, ""),
];

const NOUN: &[Rule] = &[
    ("amento", 3, ""),
    ("imento", 3, ""),
    ("mento", 6, ""),
    ("idade", 4, ""),
    ("ação", 3, ""),
    ("ição", 3, ""),
    ("ução", 3, ""),
    ("ância", 4, ""),
    ("ência", 3, ""),
    ("ador", 3, ""),
    ("edor", 3, ""),
    ("idor", 4, ""),
    ("ismo", 3, ""),
    ("ista", 4, ""),
    ("ável", 2, ""),
    ("ível", 5, ""),
    ("eza", 3, ""),
    ("ura", 4, ""),
    ("ção", 3, ""),
    ("oso", 3, ""),
    ("ivo", 4, ""),
    ("ico", 4, ""),
    ("ante", 2, ""),
    ("ente", 4, ""),
];

const VERB: &[Rule] = &[
    ("aríamos", 2, ""),
    ("eríamos", 3, ""),
    ("iríamos", 3, ""),
    ("ássemos", 2, ""),
    ("êssemos", 3, ""),
    ("íssemos", 3, ""),
    ("aremos", 2, ""),
    ("eremos", 3, ""),
    ("iremos", 3, ""),
    ("ávamos", 2, ""),
    ("áramos", 2, ""),
    ("êramos", 3, ""),
    ("íramos", 3, ""),
    ("aram", 2, ""),
    ("eram", 3, ""),
    ("iram", 3, ""),
    ("avam", 2, ""),
    ("ando", 2, ""),
    ("endo", 3, ""),
    ("indo", 3, ""),
    ("asse", 2, ""),
    ("esse", 3, ""),
    ("isse", 3, ""),
    ("amos", 2, ""),
    ("emos", 2, ""),
    ("imos", 3, ""),
    ("ará", 2, ""),
    ("erá", 3, ""),
    ("irá", 3, ""),
    ("ava", 2, ""),
    ("ado", 2, ""),
    ("ido", 4, ""),
    ("iam", 3, ""),
    ("ar", 2, ""),
    ("er", 2, ""),
    ("ir", 3, ""),
    ("ou", 3, ""),
    ("am", 2, ""),
    ("em", 3, ""),
    ("ia", 3, ""),
    ("ei", 3, ""),
    ("eu", 3, ""),
    ("iu", 3, ""),
    ("a", 3, ""),
    ("e", 3, ""),
    ("o", 3, ""),
];

const FINAL_VOWEL: &[Rule] = &[("a", 3, ""), ("e", 3, ""), ("o", 3, "")];

/// Applies the first rule whose suffix matches and leaves a long enough stem.
fn apply(word: &mut String, rules: &[Rule]) -> bool {
    for (suffix, min_stem, replacement) in rules {
        if let Some(stem) = word.strip_suffix(suffix) {
            if stem.chars().count() >= *min_stem {
                *word = format!("{stem}{replacement}");
                return true;
            }
        }
    }
    false
}

fn strip_accents(word: &str) -> String {
    word.nfd().filter(|c| !('\u{300}'..='\u{36f}').contains(c)).nfc().collect()
}

#[derive(Debug, Clone, Copy, Default)]
pub struct PortugueseStemmer;

impl Stemmer for PortugueseStemmer {
    fn stem(&self, word: &str) -> String {
        let mut w: String = word.nfc().flat_map(char::to_lowercase).collect();
        if w.chars().count() < 3 {
            return strip_accents(&w);
        }
        if w.ends_with('s') && !PLURAL_EXCEPTIONS.contains(&w.as_str()) {
            apply(&mut w, PLURAL);
        }
        if w.ends_with('a') {
            apply(&mut w, FEMININE);
        }
        apply(&mut w, ADVERB);
        apply(&mut w, AUGMENTATIVE);
        if !apply(&mut w, NOUN) && !apply(&mut w, VERB) {
            apply(&mut w, FINAL_VOWEL);
        }
        strip_accents(&w)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn stem(w: &str) -> String {
        PortugueseStemmer.stem(w)
    }

    #[test]
    fn derivational_pairs_share_stems() {
        assert_eq!(stem("abolir"), stem("abolição"));
        assert_eq!(stem("gatos"), stem("gato"));
        assert_eq!(stem("gatas"), stem("gato"));
        assert_eq!(stem("bonitas"), stem("bonito"));
        assert_eq!(stem("rapidamente"), stem("rápido"));
        assert_eq!(stem("cantando"), stem("cantar"));
        assert_eq!(stem("cantaram"), stem("cantar"));
        assert_eq!(stem("educação"), stem("educar"));
        assert_eq!(stem("Animais"), stem("animal"));
    }

    #[test]
    fn short_words_untouched() {
        assert_eq!(stem("é"), "e");
        assert_eq!(stem("lá"), "la");
        assert_eq!(stem("mais"), "mais");
    }

    #[test]
    fn deterministic() {
        for w in ["coração", "corações", "felicidade", "felizes"] {
            assert_eq!(stem(w), stem(w));
        }
    }
}
