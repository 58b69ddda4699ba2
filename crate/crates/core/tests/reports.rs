use blockstable::experiments::{
    metadata_path, path_blocks_bound, BaseSource, ExperimentKind, Mode, ReportMetadata,
};
use blockstable::{run_experiment, write_report, ExperimentConfig, ExperimentReport};

const FIGURE: &str = "5 5\n1 2\n2 3\n3 4\n4 2\n2 5\n";

fn figure_config(kind: ExperimentKind, mode: Mode, replicates: usize) -> ExperimentConfig {
    let mut cfg = ExperimentConfig::new(
        kind,
        Some(BaseSource::EdgeListText { text: FIGURE.into() }),
        replicates,
        5,
    );
    cfg.mode = mode;
    cfg
}

fn in_pool<T: Send>(threads: usize, f: impl FnOnce() -> T + Send) -> T {
    rayon::ThreadPoolBuilder::new().num_threads(threads).build().unwrap().install(f)
}

#[test]
fn reruns_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let mut cfg = ExperimentConfig::new(
        ExperimentKind::PathLength,
        Some(BaseSource::PathGraph { n: 300 }),
        64,
        17,
    );
    cfg.mode = Mode::Sample;
    let paths: Vec<_> = [1usize, 3]
        .into_iter()
        .map(|threads| {
            let report = in_pool(threads, || run_experiment(&cfg)).unwrap();
            let path = dir.path().join(format!("run{threads}.csv"));
            write_report(&report, &path).unwrap();
            path
        })
        .collect();
    let read = |p: &std::path::Path| std::fs::read(p).unwrap();
    assert_eq!(read(&paths[0]), read(&paths[1]));
    assert_eq!(read(&metadata_path(&paths[0])), read(&metadata_path(&paths[1])));

    cfg.seed = 18;
    let other = run_experiment(&cfg).unwrap();
    assert_ne!(other.csv().unwrap().as_bytes(), &read(&paths[0])[..]);
}

#[test]
fn empty_report_is_header_only() {
    let report = ExperimentReport {
        metadata: ReportMetadata {
            experiment: ExperimentKind::BlockDegree,
            seed: 0,
            n: 0,
            k: 0,
            replicates: 0,
            generator: "none".into(),
            exact: false,
        },
        rows: Vec::new(),
        observations: Vec::new(),
    };
    assert_eq!(report.csv().unwrap(), "statistic,parameter,empirical,bound,sigma,pass\n");
    assert_eq!(report.failures().count(), 0);
}

#[test]
fn path_grid_matches_the_bound_window() {
    let n = 400;
    let mut cfg = ExperimentConfig::new(
        ExperimentKind::PathLength,
        Some(BaseSource::PathGraph { n }),
        30,
        2,
    );
    cfg.mode = Mode::Sample;
    let report = run_experiment(&cfg).unwrap();
    let k = n - 1;
    let grid: Vec<f64> = (0..10 * n)
        .filter(|&t| {
            let b = path_blocks_bound(k, t as f64);
            b > 1e-3 && b <= 1.0
        })
        .map(|t| t as f64)
        .collect();
    assert!(!grid.is_empty());
    let params: Vec<f64> = report.rows_named("path_blocks_tail").map(|r| r.parameter).collect();
    assert_eq!(params, grid);
    assert_eq!(report.rows_named("diameter_over_sqrt_k_quantile").count(), 3);
    let csv = report.csv().unwrap();
    assert_eq!(csv.lines().count(), report.rows.len() + 1);
}

#[test]
fn exact_and_sampled_modes_agree() {
    for kind in [ExperimentKind::BlockDegree, ExperimentKind::PathLength] {
        let exact = run_experiment(&figure_config(kind, Mode::Exact, 1)).unwrap();
        let sampled = run_experiment(&figure_config(kind, Mode::Sample, 40_000)).unwrap();
        assert!(exact.metadata.exact && !sampled.metadata.exact);
        assert_eq!(exact.observations.len(), 25);
        for row in &sampled.rows {
            if row.statistic == "diameter_over_sqrt_k_quantile" {
                continue;
            }
            let Some(reference) = exact
                .rows
                .iter()
                .find(|r| r.statistic == row.statistic && r.parameter == row.parameter)
            else {
                continue;
            };
            let p = reference.empirical;
            let tol = 4.0 * (p * (1.0 - p) / 40_000.0).sqrt() + 1e-12;
            assert!(
                (row.empirical - p).abs() <= tol,
                "{} at {}: {} vs {}",
                row.statistic,
                row.parameter,
                row.empirical,
                p
            );
        }
    }
}

#[test]
fn tree_baseline_rows() {
    let mut cfg = ExperimentConfig::new(ExperimentKind::TreeBaseline, None, 21, 9);
    cfg.sizes = vec![500, 2000];
    let report = run_experiment(&cfg).unwrap();
    assert_eq!(report.rows.len(), 1 + 2 * cfg.sizes.len());
    let exact = report.rows_named("path_probability_exact").next().unwrap();
    assert_eq!(exact.empirical, 0.75);
    assert_eq!(exact.pass, Some(true));
}

#[test]
fn missing_base_is_a_config_error() {
    let cfg = ExperimentConfig::new(ExperimentKind::BlockDegree, None, 10, 1);
    assert!(run_experiment(&cfg).is_err());
    let mut cfg = figure_config(ExperimentKind::BlockDegree, Mode::Exact, 1);
    cfg.exact_cap = 10;
    assert!(run_experiment(&cfg).is_err());
    assert!(ExperimentConfig::from_json(r#"{"experiment": "block_degree", "replicates": 0, "seed": 1}"#).is_err());
}
