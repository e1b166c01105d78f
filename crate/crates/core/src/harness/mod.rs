//! Ingestion (FASTA, instance JSON), seeded instance generation, benchmark
//! grids and report export.

pub mod bench;
pub mod export;
pub mod fasta;
pub mod generate;
pub mod instance_file;

pub use bench::{
    applicable, choose_algorithm, run_benchmark, Algorithm, BenchInstance, BenchPlan,
    BenchmarkResult, InstanceDescriptor, Outcome,
};
pub use export::{
    cost_tsv, export_report, parse_report, read_report, render_report, report_json, ExportFormat,
    ReportDocument, Reportable, REPORT_SCHEMA_VERSION, TSV_HEADER,
};
pub use fasta::{
    fasta_to_string, parse_fasta, parse_fasta_str, write_fasta, FastaParse, FastaRecord,
};
pub use generate::{
    gen_cssp_instance, gen_planted_instance, gen_random_hamming, gen_random_levenshtein,
    PlantedCssp, PlantedInstance,
};
pub use instance_file::{CostTableFile, InstanceFile, MetricSpec, INSTANCE_SCHEMA_VERSION};
