#![allow(dead_code)]

pub mod battery;
pub mod machines;
pub mod laws;
pub mod zoo;

use buchi::Base;

pub fn b(radix: u32) -> Base {
    Base::new(radix).unwrap()
}
