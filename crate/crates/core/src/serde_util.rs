//! Serialization helpers: exact numbers and polynomials are written as strings.

use std::fmt::Display;

use serde::Serializer;

pub fn display<T: Display, S: Serializer>(v: &T, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(v)
}

pub fn display_seq<'a, T, S, I>(items: I, s: S) -> Result<S::Ok, S::Error>
where
    T: Display + 'a,
    S: Serializer,
    I: IntoIterator<Item = &'a T>,
{
    s.collect_seq(items.into_iter().map(|v| v.to_string()))
}
