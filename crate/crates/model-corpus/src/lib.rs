//! A corpus of filtered Sullivan models with known interleaving distances,
//! plus the text format used to store models and certificates on disk.
//! Every corpus entry recomputes its certificates and obstructions and
//! checks them against the expected values, so running the corpus is an
//! end-to-end self-test of the whole pipeline.

pub mod corpus;
pub mod format;

pub use corpus::{
    certificate_files, check_pair, entries, entry, model_files, model_text, pair, CorpusEntry,
    Pair,
};
pub use format::{
    field_of, parse_certificate, parse_model, serialize_model, FieldChoice, FormatError,
    LoadedModel,
};
