//! HTTP/JSON front end for the statlab engine, plus the input parsing and
//! response documents shared with the command-line tool.

pub mod api;
pub mod error;
pub mod http;
pub mod parse;

pub use error::ApiError;
pub use http::{router, Config};
pub use parse::{parse_numeric_list, NumberList, ParseError};
