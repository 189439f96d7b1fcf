//! Identifier newtypes for faults and test cases.
//!
//! Both accept an optional letter prefix when parsed (`F7`, `T3`, `#7`), and
//! display with it. Serialized forms are bare integers.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

macro_rules! label_id {
    ($name:ident, $prefix:literal, $what:literal) => {
        #[derive(
            Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
        )]
        #[serde(transparent)]
        pub struct $name(pub u32);

        impl $name {
            pub fn get(self) -> u32 {
                self.0
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, concat!($prefix, "{}"), self.0)
            }
        }

        impl FromStr for $name {
            type Err = String;

            fn from_str(s: &str) -> Result<Self, Self::Err> {
                let s = s.trim();
                let digits = s
                    .strip_prefix($prefix)
                    .or_else(|| s.strip_prefix(&$prefix.to_ascii_lowercase()))
                    .unwrap_or(s);
                let digits = digits.strip_prefix('#').unwrap_or(digits);
                match digits.parse::<u32>() {
                    Ok(0) => Err(format!(concat!($what, " id must be positive, got `{}`"), s)),
                    Ok(v) => Ok($name(v)),
                    Err(_) => Err(format!(concat!("invalid ", $what, " id `{}`"), s)),
                }
            }
        }
    };
}

label_id!(FaultId, "F", "fault");
label_id!(TestId, "T", "test");

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_with_and_without_prefix() {
        assert_eq!("7".parse::<FaultId>(), Ok(FaultId(7)));
        assert_eq!("F7".parse::<FaultId>(), Ok(FaultId(7)));
        assert_eq!(" f#7 ".parse::<FaultId>(), Ok(FaultId(7)));
        assert_eq!("T12".parse::<TestId>(), Ok(TestId(12)));
        assert!("0".parse::<FaultId>().is_err());
        assert!("F".parse::<FaultId>().is_err());
        assert!("T5".parse::<FaultId>().is_err());
    }

    #[test]
    fn display_uses_prefix() {
        assert_eq!(FaultId(3).to_string(), "F3");
        assert_eq!(TestId(16).to_string(), "T16");
    }
}
