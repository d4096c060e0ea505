//! Family strings: `cycle:N`, `path:N`, `grid2:N`, `ktri:N`, `kbip:M,N`,
//! `complete:N`, `book:C1,C2,..[:nobase]`.

use anyhow::{anyhow, bail, Context, Result};
use fedcount::graph::{complete, complete_bipartite, cycle, path};
use fedcount::structure::{book_graph, BookSpec};
use fedcount::tridiagonal::{complete_tridiagonal_graph, grid2};
use fedcount::Graph;

/// Bumped whenever the accepted grammar changes.
pub const GRAMMAR_VERSION: &str = "1";

fn number(s: &str, what: &str) -> Result<usize> {
    s.trim().parse().with_context(|| format!("{what}: expected a non-negative integer, got {s:?}"))
}

pub fn parse_family(spec: &str) -> Result<Graph> {
    let (name, args) = spec
        .split_once(':')
        .ok_or_else(|| anyhow!("family {spec:?} needs the form name:args, e.g. cycle:5"))?;
    let g = match name {
        "cycle" => cycle(number(args, "cycle")?)?,
        "path" => path(number(args, "path")?)?,
        "grid2" => grid2(number(args, "grid2")?)?,
        "ktri" => complete_tridiagonal_graph(number(args, "ktri")?)?,
        "complete" => complete(number(args, "complete")?),
        "kbip" => {
            let (m, n) = args.split_once(',').ok_or_else(|| anyhow!("kbip needs M,N"))?;
            complete_bipartite(number(m, "kbip")?, number(n, "kbip")?)?
        }
        "book" => {
            let (pages, with_base) = match args.strip_suffix(":nobase") {
                Some(p) => (p, false),
                None => (args, true),
            };
            let pages = pages
                .split(',')
                .map(|c| number(c, "book page").map(|c| c as u32))
                .collect::<Result<Vec<_>>>()?;
            book_graph(&BookSpec::new(pages, with_base)?)
        }
        other => bail!("unknown family {other:?}; known: cycle, path, grid2, ktri, kbip, complete, book"),
    };
    Ok(g)
}
