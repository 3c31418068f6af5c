//! Per-game random streams.
//!
//! Every simulated game owns one stream derived purely from
//! `(master_seed, game_index)`: the seed picks the ChaCha key and the game
//! index picks the stream. Results therefore do not depend on which worker
//! ran the game or in what order.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub type GameRng = ChaCha8Rng;

pub fn spawn_game_rng(master_seed: u64, game_index: u64) -> GameRng {
    let mut rng = ChaCha8Rng::seed_from_u64(master_seed);
    rng.set_stream(game_index);
    rng
}
