use super::{Acceptor, Context, ShardOutcome};
use crate::board::CellSet;

/// All path prefixes of `depth` cells starting at `s` that use only cells
/// above `s`, in ascending order. Each prefix is one unit of work.
pub(super) fn shards(ctx: &Context, s: u16, depth: usize) -> Vec<Vec<u16>> {
    let depth = depth.clamp(1, ctx.k);
    let mut out = Vec::new();
    let mut path = vec![s];
    grow_prefixes(ctx, s, depth, &mut path, &mut out);
    out
}

fn grow_prefixes(
    ctx: &Context,
    s: u16,
    depth: usize,
    path: &mut Vec<u16>,
    out: &mut Vec<Vec<u16>>,
) {
    if path.len() == depth {
        out.push(path.clone());
        return;
    }
    let u = *path.last().expect("non-empty prefix");
    for &v in ctx.graph.neighbors(u) {
        if v > s && !path.contains(&v) {
            path.push(v);
            grow_prefixes(ctx, s, depth, path, out);
            path.pop();
        }
    }
}

struct Search<'a> {
    ctx: &'a Context,
    start: u16,
    path: Vec<u16>,
    visited: CellSet,
    acceptor: Acceptor<'a>,
}

impl Search<'_> {
    fn extend(&mut self, len: usize) {
        let ctx = self.ctx;
        let graph = &ctx.graph;
        let u = self.path[len - 1];
        if len < ctx.k {
            for &v in graph.neighbors(u) {
                if v > self.start && !self.visited.contains(v) {
                    self.path[len] = v;
                    self.visited.insert(v);
                    self.extend(len + 1);
                    self.visited.remove(v);
                }
            }
        } else if graph.adjacent(u, self.start) {
            self.acceptor.offer(&self.path);
        }
    }
}

/// Completes every path that begins with `prefix`.
pub(super) fn run(ctx: &Context, prefix: &[u16]) -> ShardOutcome {
    let mut search = Search {
        ctx,
        start: prefix[0],
        path: vec![0; ctx.k],
        visited: CellSet::default(),
        acceptor: Acceptor::new(ctx),
    };
    for (slot, &cell) in search.path.iter_mut().zip(prefix) {
        *slot = cell;
        search.visited.insert(cell);
    }
    search.extend(prefix.len());
    search.acceptor.outcome
}
