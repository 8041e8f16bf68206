//! Orthographic syllable counting for Brazilian Portuguese.
//!
//! Each syllable has exactly one vocalic nucleus, so the count is the
//! number of nuclei. Vowel runs are split greedily left to right:
//!
//! - `u` after `q`/`g` and before a vowel is a glide (`quando`, `água`);
//! - nasal pairs `ão ãe õe ãi` are single nuclei;
//! - a vowel followed by unaccented `i`/`u` is a falling diphthong
//!   (`ai ei oi au eu ou ui iu`...), except when the glide is followed by
//!   `nh` or by `m n r l z` closing the syllable (`ra-i-nha`, `a-in-da`,
//!   `ca-ir`, `ru-im`, `Ra-ul`), which are hiatuses;
//! - accented `í`/`ú` are always nuclei (`sa-í-da`, `ba-ú`);
//! - every other vowel pair (`ia`, `ea`, `oa`, `ue`...) is a hiatus.

use unicode_normalization::UnicodeNormalization;

use super::TextError;

/// Number of syllables in an alphabetic word. Case-insensitive; accents
/// allowed. Words with no vowel letter count as one syllable.
pub fn syllabify(word: &str) -> Result<usize, TextError> {
    let chars: Vec<char> = word.nfc().flat_map(char::to_lowercase).collect();
    if chars.is_empty() || !chars.iter().all(|c| c.is_alphabetic()) {
        return Err(TextError::NotAlphabetic(word.to_string()));
    }
    Ok(count_nuclei(&chars).max(1))
}

/// Syllables of a surface form, summed over its alphabetic runs
/// (`guarda-chuva` = 4). `None` when the form has no letters.
pub fn word_syllables(surface: &str) -> Option<usize> {
    // Vowel-less fragments such as the elided `d` in `d'água` add nothing.
    let mut total = 0;
    let mut any = false;
    for part in surface.split(|c: char| !c.is_alphabetic()) {
        if !part.is_empty() {
            any = true;
            let chars: Vec<char> = part.nfc().flat_map(char::to_lowercase).collect();
            total += count_nuclei(&chars);
        }
    }
    any.then_some(total.max(1))
}

fn is_vowel(c: char) -> bool {
    matches!(
        c,
        'a' | 'e' | 'i' | 'o' | 'u' | 'y' | 'á' | 'à' | 'â' | 'ã' | 'é' | 'ê' | 'í' | 'ó' | 'ô' | 'õ' | 'ú' | 'ü'
    )
}

fn is_glide_letter(c: char) -> bool {
    matches!(c, 'i' | 'u' | 'y' | 'ü')
}

fn base(c: char) -> char {
    match c {
        'á' | 'à' | 'â' | 'ã' => 'a',
        'é' | 'ê' => 'e',
        'í' | 'y' => 'i',
        'ó' | 'ô' | 'õ' => 'o',
        'ú' | 'ü' => 'u',
        other => other,
    }
}

fn count_nuclei(chars: &[char]) -> usize {
    let n = chars.len();
    // Vowel letters that act as consonantal glides after q/g.
    let nucleus_candidate: Vec<bool> = (0..n)
        .map(|k| {
            if !is_vowel(chars[k]) {
                return false;
            }
            let after_qg = k > 0 && matches!(chars[k - 1], 'q' | 'g');
            let before_vowel = k + 1 < n && is_vowel(chars[k + 1]);
            !(matches!(chars[k], 'u' | 'ü') && after_qg && before_vowel)
        })
        .collect();

    let mut nuclei = 0;
    let mut k = 0;
    while k < n {
        if !nucleus_candidate[k] {
            k += 1;
            continue;
        }
        let mut end = k;
        while end < n && nucleus_candidate[end] {
            end += 1;
        }
        let mut i = k;
        while i < end {
            nuclei += 1;
            if i + 1 < end && forms_diphthong(chars[i], chars[i + 1], &chars[i + 2..]) {
                i += 2;
            } else {
                i += 1;
            }
        }
        k = end;
    }
    nuclei
}

fn forms_diphthong(first: char, second: char, rest: &[char]) -> bool {
    if matches!(first, 'ã' | 'õ') && matches!(second, 'o' | 'e' | 'i') {
        return true;
    }
    if !is_glide_letter(second) || second == 'ü' {
        return false;
    }
    if matches!(first, 'í' | 'ú') || base(first) == base(second) {
        return false;
    }
    match rest {
        ['n', 'h', ..] => false,
        [c, next, ..] if matches!(c, 'm' | 'n' | 'r' | 'l' | 'z') && !is_vowel(*next) => false,
        ['m' | 'n' | 'r' | 'l' | 'z'] => false,
        _ => true,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    // Hand-syllabified reference words; the expected count is the number
    // of hyphen-separated parts.
    const REFERENCE: &[&str] = &[
        "a", "ca-sa", "cri-an-ça", "ár-vo-re", "pá-gi-na", "co-ra-ção", "pão", "mãe", "cães", "põe",
        "lei-te", "cou-ro", "pai", "mui-to", "di-a", "ri-o", "sa-í-da", "ba-ú", "ra-i-nha", "a-in-da",
        "ca-ir", "ru-im", "Ra-ul", "quan-do", "qua-tro", "que-ro", "guer-ra", "á-gua", "lín-gua", "a-gu-do",
        "pás-sa-ro", "sau-da-de", "cai-xa", "fei-ra", "jo-e-lho", "po-e-ta", "vo-o", "le-em", "Co-im-bra",
        "ár-du-o", "e-du-ca-ção", "his-tó-ri-a", "pa-ís", "pais", "ci-ên-ci-a", "ja-ne-la", "Bra-sil",
        "o-lho", "bor-bo-le-ta", "fa-mí-li-a", "ho-mem", "ma-çã", "trans-por-te", "sa-guão", "a-zul",
        "viu", "par-tiu", "fui", "flui-do", "ru-í-do",
    ];

    #[test]
    fn reference_words() {
        for entry in REFERENCE {
            let word: String = entry.chars().filter(|c| *c != '-').collect();
            let expected = entry.split('-').count();
            assert_eq!(syllabify(&word).unwrap(), expected, "{entry}");
        }
    }

    #[test]
    fn spec_examples() {
        assert_eq!(syllabify("a").unwrap(), 1);
        assert_eq!(syllabify("casa").unwrap(), 2);
        assert_eq!(syllabify("criança").unwrap(), 3);
        assert_eq!(syllabify("CRIANÇA").unwrap(), 3);
    }

    #[test]
    fn rejects_non_alphabetic() {
        assert!(syllabify("").is_err());
        assert!(syllabify("abc1").is_err());
        assert!(syllabify("guarda-chuva").is_err());
    }

    #[test]
    fn surface_forms() {
        assert_eq!(word_syllables("guarda-chuva"), Some(4));
        assert_eq!(word_syllables("1990"), None);
        assert_eq!(word_syllables("d'água"), Some(2));
    }

    proptest! {
        #[test]
        fn bounded_by_vowel_letters(word in "[bcdfglmnpqrstvxzç]{0,2}([aeiouáéíóúâêôãõ][bcdfglmnpqrstvxzç]{0,2}){1,6}") {
            let count = syllabify(&word).unwrap();
            let vowels = word.chars().filter(|c| is_vowel(*c)).count();
            prop_assert!(count >= 1);
            prop_assert!(count <= vowels);
            prop_assert_eq!(count, syllabify(&word.to_uppercase()).unwrap());
        }
    }
}
