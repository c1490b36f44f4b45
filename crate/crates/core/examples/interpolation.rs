//! Recover the Holant with the rank-one projector D in every slot from
//! grids that only use f = [1, 2, 3, 5], by solving a Vandermonde system.

use holant3::interp::{direct_with_d, interp_fixtures};

pub fn main() -> anyhow::Result<()> {
    for fx in interp_fixtures() {
        let rec = holant3::interp::vandermonde_recover(&fx.grid, &fx.slots, &fx.f)?;
        let direct = direct_with_d(&fx.grid, &fx.slots, &fx.f)?;
        let nodes: Vec<String> = rec.nodes.iter().map(|x| x.to_string()).collect();
        println!("{:>12}: nodes [{}]", fx.id, nodes.join(", "));
        println!("{:>12}  recovered {} = direct {}: {}", "", rec.recovered, direct, rec.recovered == direct);
    }
    Ok(())
}
