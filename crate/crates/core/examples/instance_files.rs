//! Write the JSON instance files under `fixtures/` (or the directory given
//! as the first argument) and read each one back.

use std::fs;
use std::path::Path;

use holant3::fixtures::{cube_grid, k33_grid, triple_system};
use holant3::grid::cover_signature;
use holant3::io::{GridFile, SetSystemFile};
use holant3::signature::SymSig3;

pub fn write_all(dir: &Path) -> anyhow::Result<Vec<String>> {
    fs::create_dir_all(dir)?;
    let f = cover_signature();
    let grids = [
        ("k33.json", GridFile::from_grid(&f, &k33_grid(&f))),
        ("k33-one-hot.json", {
            let g = SymSig3::from_ints([0, 1, 0, 0]);
            GridFile::from_grid(&g, &k33_grid(&g))
        }),
        ("cube-planar.json", GridFile::from_grid(&f, &cube_grid(&f))),
    ];
    let mut written = Vec::new();
    for (name, file) in grids {
        let json = file.to_json();
        anyhow::ensure!(GridFile::from_json(&json)? == file, "{name} does not round-trip");
        fs::write(dir.join(name), json + "\n")?;
        written.push(name.to_string());
    }
    let systems = [
        ("triple.json", SetSystemFile::from_system(&triple_system())),
        ("cube-cover-planar.json", SetSystemFile::from_planar_grid(&cube_grid(&f))?),
    ];
    for (name, file) in systems {
        let json = file.to_json();
        anyhow::ensure!(SetSystemFile::from_json(&json)? == file, "{name} does not round-trip");
        fs::write(dir.join(name), json + "\n")?;
        written.push(name.to_string());
    }
    Ok(written)
}

pub fn main() -> anyhow::Result<()> {
    let dir = std::env::args().nth(1).unwrap_or_else(|| "fixtures".into());
    for name in write_all(Path::new(&dir))? {
        println!("wrote {dir}/{name}");
    }
    Ok(())
}
