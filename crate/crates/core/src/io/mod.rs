//! Built-in data, text formats and reports.

pub mod fixtures;
pub mod formats;
pub mod reports;
mod tables;

pub use fixtures::{builtin, fixture_set, paper_large_set, FixtureSet, BUILTIN_LARGE_SET};
pub use formats::{
    design_from_section, format_design, format_design_section, format_generator, format_km,
    format_large_set, format_subspace, load_designs, load_large_set, parse_design_sections,
    parse_generator, parse_km, parse_subspace, resolve_group, DesignSection, KmMatrixFile,
};
pub use reports::{to_json, KmSummary, Report};
