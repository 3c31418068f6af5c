//! Small deterministic games whose trees can be enumerated outright.
//! Used to check the search agent against exact minimax answers.

use std::collections::BTreeMap;

use rand::Rng;

use crate::error::{Error, Result};
use crate::game::{Game, MoveLabel, Outcome, PlayerId};

/// An explicit game tree; moves are child indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TreeNode {
    Leaf(Outcome),
    Branch { player: PlayerId, children: Vec<TreeNode> },
}

impl TreeNode {
    /// # Panics
    /// If `player` is not 0 or 1, or `children` is empty.
    pub fn branch(player: usize, children: Vec<TreeNode>) -> TreeNode {
        assert!(!children.is_empty(), "branch without children");
        TreeNode::Branch { player: PlayerId::new(player).expect("player 0 or 1"), children }
    }

    pub fn leaf_count(&self) -> usize {
        match self {
            TreeNode::Leaf(_) => 1,
            TreeNode::Branch { children, .. } => children.iter().map(TreeNode::leaf_count).sum(),
        }
    }

    fn walk(&self, path: &[u8]) -> &TreeNode {
        path.iter().fold(self, |node, &i| match node {
            TreeNode::Branch { children, .. } => &children[i as usize],
            TreeNode::Leaf(_) => node,
        })
    }
}

#[derive(Clone, Debug)]
pub struct TreeGame {
    root: TreeNode,
}

impl TreeGame {
    pub fn new(root: TreeNode) -> Self {
        TreeGame { root }
    }

    pub fn root(&self) -> &TreeNode {
        &self.root
    }
}

impl Game for TreeGame {
    type State = Vec<u8>;
    type Move = u8;

    fn domain(&self) -> &'static str {
        "tree"
    }

    fn new_game<R: Rng + ?Sized>(&self, _rng: &mut R) -> Vec<u8> {
        Vec::new()
    }

    fn legal_moves(&self, state: &Vec<u8>) -> Vec<u8> {
        match self.root.walk(state) {
            TreeNode::Leaf(_) => Vec::new(),
            TreeNode::Branch { children, .. } => (0..children.len() as u8).collect(),
        }
    }

    fn play<R: Rng + ?Sized>(&self, state: &mut Vec<u8>, mv: &u8, _rng: &mut R) -> Result<()> {
        match self.root.walk(state) {
            TreeNode::Branch { children, .. } if (*mv as usize) < children.len() => {
                state.push(*mv);
                Ok(())
            }
            _ => Err(Error::contract(format!("illegal tree move {mv}"))),
        }
    }

    fn current_player(&self, state: &Vec<u8>) -> PlayerId {
        match self.root.walk(state) {
            TreeNode::Branch { player, .. } => *player,
            TreeNode::Leaf(_) => {
                if state.len().is_multiple_of(2) {
                    PlayerId::FIRST
                } else {
                    PlayerId::SECOND
                }
            }
        }
    }

    fn outcome(&self, state: &Vec<u8>) -> Outcome {
        match self.root.walk(state) {
            TreeNode::Leaf(o) => *o,
            TreeNode::Branch { .. } => Outcome::Ongoing,
        }
    }

    fn move_label(&self, mv: &u8) -> MoveLabel {
        MoveLabel::new(mv.to_string())
    }

    fn state_summary(&self, state: &Vec<u8>) -> BTreeMap<String, i64> {
        BTreeMap::from([("depth".to_owned(), state.len() as i64)])
    }
}

/// Subtraction game: remove 1..=`max_take` from a pile; taking the last item wins.
#[derive(Clone, Copy, Debug)]
pub struct Countdown {
    pile: u8,
    max_take: u8,
}

impl Countdown {
    pub fn new(pile: u8, max_take: u8) -> Self {
        Countdown { pile, max_take: max_take.max(1) }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CountdownState {
    pub remaining: u8,
    pub to_move: PlayerId,
    pub last_mover: Option<PlayerId>,
}

impl Game for Countdown {
    type State = CountdownState;
    type Move = u8;

    fn domain(&self) -> &'static str {
        "countdown"
    }

    fn new_game<R: Rng + ?Sized>(&self, _rng: &mut R) -> CountdownState {
        CountdownState { remaining: self.pile, to_move: PlayerId::FIRST, last_mover: None }
    }

    fn legal_moves(&self, s: &CountdownState) -> Vec<u8> {
        (1..=self.max_take.min(s.remaining)).collect()
    }

    fn play<R: Rng + ?Sized>(&self, s: &mut CountdownState, mv: &u8, _rng: &mut R) -> Result<()> {
        if *mv == 0 || *mv > self.max_take || *mv > s.remaining {
            return Err(Error::contract(format!("cannot take {mv} from {}", s.remaining)));
        }
        s.remaining -= mv;
        s.last_mover = Some(s.to_move);
        s.to_move = s.to_move.opponent();
        Ok(())
    }

    fn current_player(&self, s: &CountdownState) -> PlayerId {
        s.to_move
    }

    fn outcome(&self, s: &CountdownState) -> Outcome {
        match (s.remaining, s.last_mover) {
            (0, Some(p)) => Outcome::Win(p),
            (0, None) => Outcome::Draw,
            _ => Outcome::Ongoing,
        }
    }

    fn move_label(&self, mv: &u8) -> MoveLabel {
        MoveLabel::new(format!("take{mv}"))
    }

    fn state_summary(&self, s: &CountdownState) -> BTreeMap<String, i64> {
        BTreeMap::from([("remaining".to_owned(), s.remaining as i64)])
    }
}

/// A game that never ends: one legal move that changes nothing but a counter.
#[derive(Clone, Copy, Debug)]
pub struct Cycle;

impl Game for Cycle {
    type State = u32;
    type Move = ();

    fn domain(&self) -> &'static str {
        "cycle"
    }

    fn new_game<R: Rng + ?Sized>(&self, _rng: &mut R) -> u32 {
        0
    }

    fn legal_moves(&self, _s: &u32) -> Vec<()> {
        vec![()]
    }

    fn play<R: Rng + ?Sized>(&self, s: &mut u32, _mv: &(), _rng: &mut R) -> Result<()> {
        *s += 1;
        Ok(())
    }

    fn current_player(&self, s: &u32) -> PlayerId {
        if s.is_multiple_of(2) {
            PlayerId::FIRST
        } else {
            PlayerId::SECOND
        }
    }

    fn outcome(&self, _s: &u32) -> Outcome {
        Outcome::Ongoing
    }

    fn move_label(&self, _mv: &()) -> MoveLabel {
        MoveLabel::new("loop")
    }

    fn state_summary(&self, s: &u32) -> BTreeMap<String, i64> {
        BTreeMap::from([("moves".to_owned(), *s as i64)])
    }
}
