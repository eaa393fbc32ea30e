//! Shared helpers for the binary tests: invoking the CLI and a small XML
//! well-formedness scanner for the emitted SVGs (tag balance, attribute
//! quoting, entity syntax - enough to certify our own static output).

use std::path::Path;
use std::process::{Command, Output};

pub fn run_cli(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dht-guardband"))
        .args(args)
        .output()
        .expect("failed to spawn dht-guardband")
}

pub fn read(path: &Path) -> String {
    std::fs::read_to_string(path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

/// Panics with a description if `text` is not a well-formed XML document
/// with a single root element.
pub fn assert_well_formed_xml(text: &str) {
    let mut stack: Vec<String> = Vec::new();
    let mut roots = 0usize;
    let mut rest = text;

    while let Some(open) = rest.find('<') {
        let before = &rest[..open];
        check_text_entities(before);
        rest = &rest[open..];

        if let Some(tail) = rest.strip_prefix("<!--") {
            let end = tail.find("-->").expect("unterminated comment");
            rest = &tail[end + 3..];
            continue;
        }
        if rest.starts_with("<?") {
            let end = rest
                .find("?>")
                .expect("unterminated processing instruction");
            rest = &rest[end + 2..];
            continue;
        }

        let end = find_tag_end(rest);
        let tag = &rest[1..end]; // without the angle brackets
        rest = &rest[end + 1..];

        if let Some(name) = tag.strip_prefix('/') {
            let name = name.trim();
            let top = stack
                .pop()
                .unwrap_or_else(|| panic!("stray closing tag </{name}>"));
            assert_eq!(top, name, "mismatched closing tag");
        } else {
            let self_closing = tag.ends_with('/');
            let tag = tag.strip_suffix('/').unwrap_or(tag);
            let name = tag
                .split_whitespace()
                .next()
                .expect("empty tag")
                .to_string();
            assert!(
                name.chars()
                    .all(|c| c.is_ascii_alphanumeric() || c == ':' || c == '-' || c == '_'),
                "bad element name '{name}'"
            );
            check_attribute_quoting(tag);
            if stack.is_empty() {
                roots += 1;
            }
            if !self_closing {
                stack.push(name);
            }
        }
    }
    check_text_entities(rest);
    assert!(stack.is_empty(), "unclosed elements: {stack:?}");
    assert_eq!(roots, 1, "expected exactly one root element, found {roots}");
}

/// Position of the '>' that ends the tag, skipping quoted attribute values.
fn find_tag_end(s: &str) -> usize {
    let mut quote: Option<char> = None;
    for (i, c) in s.char_indices() {
        match (quote, c) {
            (None, '"') | (None, '\'') => quote = Some(c),
            (Some(q), c) if c == q => quote = None,
            (None, '>') => return i,
            (None, '<') if i > 0 => panic!("raw '<' inside tag"),
            _ => {}
        }
    }
    panic!("unterminated tag: {s:.40?}");
}

fn check_attribute_quoting(tag: &str) {
    let quotes = tag.chars().filter(|&c| c == '"').count();
    assert!(quotes % 2 == 0, "unbalanced attribute quotes in <{tag}>");
}

fn check_text_entities(text: &str) {
    let mut rest = text;
    while let Some(amp) = rest.find('&') {
        let tail = &rest[amp..];
        let semi = tail.find(';').expect("unterminated entity reference");
        let entity = &tail[1..semi];
        let ok = matches!(entity, "amp" | "lt" | "gt" | "quot" | "apos")
            || (entity.starts_with('#') && entity[1..].chars().all(|c| c.is_ascii_digit()));
        assert!(ok, "unknown entity &{entity};");
        rest = &tail[semi + 1..];
    }
}

#[allow(dead_code)]
pub fn assert_rejected_xml(text: &str) {
    let result = std::panic::catch_unwind(|| assert_well_formed_xml(text));
    assert!(result.is_err(), "scanner accepted malformed XML: {text:?}");
}
