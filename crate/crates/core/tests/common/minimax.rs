//! Random explicit game trees solved exactly by minimax.

use playsim::mcts::{run_search, ExplorationConstant, SearchBudget};
use playsim::toy::{TreeGame, TreeNode};
use playsim::{spawn_game_rng, Game, Outcome, PlayerId};
use rand::Rng;

fn random_tree<R: Rng>(rng: &mut R, player: usize, depth: u32) -> TreeNode {
    if depth == 0 || (depth < 3 && rng.random_bool(0.15)) {
        let o = match rng.random_range(0..5) {
            0 | 1 => Outcome::Win(PlayerId::FIRST),
            2 | 3 => Outcome::Win(PlayerId::SECOND),
            _ => Outcome::Draw,
        };
        return TreeNode::Leaf(o);
    }
    let width = rng.random_range(2..=3);
    TreeNode::branch(player, (0..width).map(|_| random_tree(rng, 1 - player, depth - 1)).collect())
}

/// Game value for player 0: +1 win, 0 draw, -1 loss.
pub fn value(node: &TreeNode) -> i32 {
    match node {
        TreeNode::Leaf(o) => o.reward_for(PlayerId::FIRST).expect("leaf is terminal"),
        TreeNode::Branch { player, children } => {
            let vals = children.iter().map(value);
            if player.index() == 0 {
                vals.max().unwrap()
            } else {
                vals.min().unwrap()
            }
        }
    }
}

/// Root moves whose minimax value equals the best one for player 0.
pub fn optimal_moves(root: &TreeNode) -> Vec<u8> {
    let TreeNode::Branch { children, .. } = root else { return Vec::new() };
    let vals: Vec<i32> = children.iter().map(value).collect();
    let best = *vals.iter().max().unwrap();
    (0..vals.len() as u8).filter(|&i| vals[i as usize] == best).collect()
}

/// Plays search against `trees` random trees in which some root move is
/// suboptimal and returns how often the chosen move was optimal.
pub fn agreement(trees: usize, rollouts: u32, seed: u64) -> (usize, usize) {
    let mut gen = spawn_game_rng(seed, u64::MAX);
    let mut agree = 0;
    let mut done = 0;
    while done < trees {
        let root = random_tree(&mut gen, 0, 4);
        let TreeNode::Branch { children, .. } = &root else { continue };
        let best = optimal_moves(&root);
        if best.len() == children.len() {
            continue;
        }
        let game = TreeGame::new(root);
        let mut rng = spawn_game_rng(seed, done as u64);
        let state = game.new_game(&mut rng);
        let mv = run_search::<_, f64, _>(
            &game,
            &state,
            SearchBudget::with_rollouts(rollouts).unwrap(),
            ExplorationConstant::default(),
            &mut rng,
        )
        .expect("search on a non-terminal root");
        if best.contains(&mv) {
            agree += 1;
        }
        done += 1;
    }
    (agree, trees)
}
