//! Budget-limited Monte-Carlo Tree Search with UCB1 selection.
//!
//! The tree is open-loop: edges are moves and nothing else. Every iteration
//! clones the root state and re-applies the edge moves with the live random
//! generator, so chance events (tile refills, card draws) are re-sampled on
//! each descent and node statistics average over them. Because a re-sampled
//! state can make a stored edge illegal, selection only considers children
//! whose move is legal in the state actually reached, and the "untried" moves
//! of a node are the currently legal moves that have no child yet.
//!
//! The number of iterations (rollouts) per decision is the skill knob.

use std::collections::HashMap;
use std::hash::Hash;

use rand::Rng;

use crate::error::{Error, Result};
use crate::game::{Game, Outcome, PlayerId};
use crate::scalar::Scalar;

pub type NodeId = usize;

const ROOT: NodeId = 0;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchBudget {
    rollouts: u32,
    playout_depth_cap: u32,
}

impl SearchBudget {
    pub const DEFAULT_DEPTH_CAP: u32 = 300;

    pub fn new(rollouts: u32, playout_depth_cap: u32) -> Result<Self> {
        if rollouts == 0 {
            return Err(Error::input("rollouts must be at least 1"));
        }
        if playout_depth_cap == 0 {
            return Err(Error::input("playout depth cap must be at least 1"));
        }
        Ok(SearchBudget { rollouts, playout_depth_cap })
    }

    pub fn with_rollouts(rollouts: u32) -> Result<Self> {
        Self::new(rollouts, Self::DEFAULT_DEPTH_CAP)
    }

    pub fn rollouts(&self) -> u32 {
        self.rollouts
    }

    pub fn playout_depth_cap(&self) -> u32 {
        self.playout_depth_cap
    }
}

/// UCB1 exploration weight `c`, non-negative. Defaults to sqrt(2).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ExplorationConstant<F>(F);

impl<F: Scalar> ExplorationConstant<F> {
    pub fn new(c: F) -> Result<Self> {
        if !c.is_finite() || c < F::zero() {
            return Err(Error::input(format!("exploration constant {c} must be finite and >= 0")));
        }
        Ok(ExplorationConstant(c))
    }

    pub fn value(self) -> F {
        self.0
    }
}

impl<F: Scalar> Default for ExplorationConstant<F> {
    fn default() -> Self {
        ExplorationConstant(F::of_int(2).sqrt())
    }
}

/// `mean + c * sqrt(ln(parent_visits) / visits)`, or +inf for an unvisited child.
pub fn ucb1_score<F: Scalar>(visits: u64, total_reward: F, parent_visits: u64, c: F) -> F {
    if visits == 0 {
        return F::infinity();
    }
    let n = F::of_count(visits);
    let parent = F::of_count(parent_visits.max(1));
    total_reward / n + c * (parent.ln() / n).sqrt()
}

#[derive(Clone, Debug)]
pub struct SearchNode<M, F> {
    mv: Option<M>,
    acting_player: Option<PlayerId>,
    visits: u64,
    total_reward: F,
    children: Vec<NodeId>,
    by_move: HashMap<M, NodeId>,
}

impl<M: Clone + Eq + Hash, F: Scalar> SearchNode<M, F> {
    fn new(mv: Option<M>, acting_player: Option<PlayerId>) -> Self {
        SearchNode {
            mv,
            acting_player,
            visits: 0,
            total_reward: F::zero(),
            children: Vec::new(),
            by_move: HashMap::new(),
        }
    }

    /// Edge move from the parent; `None` at the root.
    pub fn mv(&self) -> Option<&M> {
        self.mv.as_ref()
    }

    /// Player who chose the edge into this node; `None` at the root.
    pub fn acting_player(&self) -> Option<PlayerId> {
        self.acting_player
    }

    pub fn visits(&self) -> u64 {
        self.visits
    }

    /// Sum of backpropagated rewards from the acting player's perspective.
    pub fn total_reward(&self) -> F {
        self.total_reward
    }

    pub fn mean_reward(&self) -> F {
        if self.visits == 0 {
            F::zero()
        } else {
            self.total_reward / F::of_count(self.visits)
        }
    }

    /// Children in expansion order.
    pub fn children(&self) -> &[NodeId] {
        &self.children
    }

    pub fn ucb1(&self, parent_visits: u64, c: F) -> F {
        ucb1_score(self.visits, self.total_reward, parent_visits, c)
    }
}

/// One completed iteration: the tree path walked (root first) and the result.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IterationRecord {
    pub path: Vec<NodeId>,
    pub outcome: Outcome,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Playout {
    pub outcome: Outcome,
    pub moves_applied: u32,
}

/// Plays uniformly random legal moves from `state` until the game ends or
/// `depth_cap` moves have been made; hitting the cap counts as a draw.
pub fn simulate_playout<G, R>(
    game: &G,
    mut state: G::State,
    depth_cap: u32,
    rng: &mut R,
) -> Result<Playout>
where
    G: Game,
    R: Rng + ?Sized,
{
    let mut moves_applied = 0;
    loop {
        let outcome = game.outcome(&state);
        if outcome.is_terminal() {
            return Ok(Playout { outcome, moves_applied });
        }
        if moves_applied >= depth_cap {
            return Ok(Playout { outcome: Outcome::Draw, moves_applied });
        }
        let mv = game
            .random_move(&state, rng)
            .ok_or_else(|| Error::contract("non-terminal state without legal moves"))?;
        game.play(&mut state, &mv, rng)?;
        moves_applied += 1;
    }
}

#[derive(Clone, Debug)]
pub struct SearchTree<M, F> {
    nodes: Vec<SearchNode<M, F>>,
}

impl<M: Clone + Eq + Hash, F: Scalar> Default for SearchTree<M, F> {
    fn default() -> Self {
        Self::new()
    }
}

impl<M: Clone + Eq + Hash, F: Scalar> SearchTree<M, F> {
    pub fn new() -> Self {
        SearchTree { nodes: vec![SearchNode::new(None, None)] }
    }

    pub fn root(&self) -> &SearchNode<M, F> {
        &self.nodes[ROOT]
    }

    pub fn root_id(&self) -> NodeId {
        ROOT
    }

    pub fn node(&self, id: NodeId) -> &SearchNode<M, F> {
        &self.nodes[id]
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    fn add_child(&mut self, parent: NodeId, mv: M, acting: PlayerId) -> NodeId {
        let id = self.nodes.len();
        self.nodes.push(SearchNode::new(Some(mv.clone()), Some(acting)));
        let p = &mut self.nodes[parent];
        p.children.push(id);
        p.by_move.insert(mv, id);
        id
    }

    /// Adds one visit to every node on `path` and credits each non-root node
    /// with the outcome's reward for the player who chose its edge.
    pub fn backpropagate(&mut self, path: &[NodeId], outcome: Outcome) -> Result<()> {
        if !outcome.is_terminal() {
            return Err(Error::contract("backpropagating an ongoing outcome"));
        }
        for &id in path {
            let node = &mut self.nodes[id];
            node.visits += 1;
            if let Some(r) = node.acting_player.and_then(|p| outcome.reward_for(p)) {
                node.total_reward = node.total_reward + F::of_int(r);
            }
        }
        Ok(())
    }

    /// Selection, expansion, simulation and backpropagation, once.
    pub fn iterate<G, R>(
        &mut self,
        game: &G,
        root_state: &G::State,
        budget: SearchBudget,
        c: ExplorationConstant<F>,
        rng: &mut R,
    ) -> Result<IterationRecord>
    where
        G: Game<Move = M>,
        R: Rng + ?Sized,
    {
        let mut state = root_state.clone();
        let mut path = vec![ROOT];
        let mut node = ROOT;

        loop {
            if game.outcome(&state).is_terminal() {
                break;
            }
            let legal = game.legal_moves(&state);
            let acting = game.current_player(&state);

            let untried = legal.iter().find(|m| !self.nodes[node].by_move.contains_key(*m));
            if let Some(mv) = untried {
                let child = self.add_child(node, mv.clone(), acting);
                game.play(&mut state, mv, rng)?;
                path.push(child);
                break;
            }

            let parent_visits = self.nodes[node].visits;
            let mut best: Option<(NodeId, F)> = None;
            for mv in &legal {
                let id = self.nodes[node].by_move[mv];
                let score = self.nodes[id].ucb1(parent_visits, c.value());
                if best.is_none_or(|(_, s)| score > s) {
                    best = Some((id, score));
                }
            }
            let (chosen, _) =
                best.ok_or_else(|| Error::contract("non-terminal state without legal moves"))?;
            let mv = self.nodes[chosen].mv.clone().expect("non-root node has a move");
            game.play(&mut state, &mv, rng)?;
            path.push(chosen);
            node = chosen;
        }

        let playout = simulate_playout(game, state, budget.playout_depth_cap(), rng)?;
        self.backpropagate(&path, playout.outcome)?;
        Ok(IterationRecord { path, outcome: playout.outcome })
    }

    /// Most-visited root child; ties go to the higher mean reward, then to the
    /// child expanded first (the root's legal-move order).
    pub fn choose_final_move(&self) -> Result<M> {
        let mut best: Option<&SearchNode<M, F>> = None;
        for &id in &self.root().children {
            let child = &self.nodes[id];
            if child.visits == 0 {
                continue;
            }
            let better = match best {
                None => true,
                Some(b) => {
                    child.visits > b.visits
                        || (child.visits == b.visits && child.mean_reward() > b.mean_reward())
                }
            };
            if better {
                best = Some(child);
            }
        }
        best.and_then(|n| n.mv.clone())
            .ok_or_else(|| Error::contract("root has no visited child"))
    }
}

fn check_root<G: Game>(game: &G, root_state: &G::State) -> Result<()> {
    if game.outcome(root_state).is_terminal() {
        return Err(Error::contract("search started from a terminal state"));
    }
    Ok(())
}

/// Runs exactly `budget.rollouts()` iterations and returns the tree.
pub fn search<G, F, R>(
    game: &G,
    root_state: &G::State,
    budget: SearchBudget,
    c: ExplorationConstant<F>,
    rng: &mut R,
) -> Result<SearchTree<G::Move, F>>
where
    G: Game,
    F: Scalar,
    R: Rng + ?Sized,
{
    check_root(game, root_state)?;
    let mut tree = SearchTree::new();
    for _ in 0..budget.rollouts() {
        tree.iterate(game, root_state, budget, c, rng)?;
    }
    Ok(tree)
}

/// A finished tree with the record of every iteration.
pub type LoggedSearch<M, F> = (SearchTree<M, F>, Vec<IterationRecord>);

/// Like [`search`] but also returns every iteration's path and outcome.
pub fn search_logged<G, F, R>(
    game: &G,
    root_state: &G::State,
    budget: SearchBudget,
    c: ExplorationConstant<F>,
    rng: &mut R,
) -> Result<LoggedSearch<G::Move, F>>
where
    G: Game,
    F: Scalar,
    R: Rng + ?Sized,
{
    check_root(game, root_state)?;
    let mut tree = SearchTree::new();
    let mut log = Vec::with_capacity(budget.rollouts() as usize);
    for _ in 0..budget.rollouts() {
        log.push(tree.iterate(game, root_state, budget, c, rng)?);
    }
    Ok((tree, log))
}

pub fn run_search<G, F, R>(
    game: &G,
    root_state: &G::State,
    budget: SearchBudget,
    c: ExplorationConstant<F>,
    rng: &mut R,
) -> Result<G::Move>
where
    G: Game,
    F: Scalar,
    R: Rng + ?Sized,
{
    search(game, root_state, budget, c, rng)?.choose_final_move()
}

/// A player with a fixed per-decision rollout budget.
#[derive(Clone, Copy, Debug)]
pub struct MctsAgent<F> {
    pub budget: SearchBudget,
    pub exploration: ExplorationConstant<F>,
}

impl<F: Scalar> MctsAgent<F> {
    pub fn new(budget: SearchBudget, exploration: ExplorationConstant<F>) -> Self {
        MctsAgent { budget, exploration }
    }

    /// Searches for a move. A forced move is returned without searching.
    pub fn choose_move<G, R>(&self, game: &G, state: &G::State, rng: &mut R) -> Result<G::Move>
    where
        G: Game,
        R: Rng + ?Sized,
    {
        check_root(game, state)?;
        let legal = game.legal_moves(state);
        match legal.as_slice() {
            [] => Err(Error::contract("non-terminal state without legal moves")),
            [only] => Ok(only.clone()),
            _ => run_search(game, state, self.budget, self.exploration, rng),
        }
    }
}
