//! JSON helpers: complex numbers serialize as `{"re": .., "im": ..}`.

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::ComplexScalar;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JsonComplex(pub ComplexScalar);

impl Serialize for JsonComplex {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("Complex", 2)?;
        st.serialize_field("re", &self.0.re)?;
        st.serialize_field("im", &self.0.im)?;
        st.end()
    }
}

pub fn complex<S: Serializer>(z: &ComplexScalar, serializer: S) -> Result<S::Ok, S::Error> {
    JsonComplex(*z).serialize(serializer)
}

pub fn complex_opt<S: Serializer>(z: &Option<ComplexScalar>, serializer: S) -> Result<S::Ok, S::Error> {
    z.map(JsonComplex).serialize(serializer)
}

pub fn complex_vec<S: Serializer>(zs: &[ComplexScalar], serializer: S) -> Result<S::Ok, S::Error> {
    serializer.collect_seq(zs.iter().copied().map(JsonComplex))
}
