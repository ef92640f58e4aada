use std::path::Path;

use cyclodefect::scan::ScanReport;

/// One row per member: block_id, residue_key, multipartition, weight,
/// defect, core, and orbit_size when the scan was run with `--p`.
pub fn write(path: &Path, report: &ScanReport) -> Result<(), csv::Error> {
    let mut out = csv::Writer::from_path(path)?;
    let mut header = vec![
        "block_id",
        "residue_key",
        "multipartition",
        "weight",
        "defect",
        "core",
    ];
    if report.p.is_some() {
        header.push("orbit_size");
    }
    out.write_record(&header)?;
    for block in &report.blocks {
        let key: Vec<String> = block.key.counts.iter().map(usize::to_string).collect();
        let key = key.join(",");
        for m in &block.members {
            let mut row = vec![
                block.id.to_string(),
                key.clone(),
                m.multipartition.to_string(),
                m.fayers_weight.to_string(),
                m.defect.to_string(),
                m.core.to_string(),
            ];
            if let Some(size) = m.orbit_size {
                row.push(size.to_string());
            }
            out.write_record(&row)?;
        }
    }
    out.flush()?;
    Ok(())
}
