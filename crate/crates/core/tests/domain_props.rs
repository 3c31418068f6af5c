//! Rule invariants of both domains under uniformly random play and random mid-game states.

use std::collections::BTreeSet;

use playsim::cardonomicon::{
    CardInstance, CardMove, Cardonomicon, CardonomiconState, PlayerSide, Target, DECK_SIZE, MAX_MANA,
};
use playsim::scrabble::Scrabble;
use playsim::{reward, spawn_game_rng, Game, Outcome, PlayerId};
use proptest::prelude::*;
use rand::seq::{IndexedRandom, SliceRandom};
use rand::Rng;

fn random_side<R: Rng>(rng: &mut R) -> PlayerSide {
    let mut ids: Vec<u8> = (0..DECK_SIZE as u8).collect();
    ids.shuffle(rng);
    let on_board = rng.random_range(0..=5);
    let in_hand = rng.random_range(0..=6);
    let in_deck = rng.random_range(0..=DECK_SIZE - on_board - in_hand);
    let board = ids[..on_board]
        .iter()
        .map(|&id| CardInstance::new(id, rng.random_range(1..=8), rng.random_bool(0.6)))
        .collect();
    let hand = ids[on_board..on_board + in_hand].to_vec();
    let deck = ids[on_board + in_hand..on_board + in_hand + in_deck].to_vec();
    let cap = rng.random_range(1..=MAX_MANA);
    PlayerSide::new(rng.random_range(1..=20), deck, hand, board, cap, rng.random_range(0..=cap)).unwrap()
}

fn random_card_state(seed: u64) -> CardonomiconState {
    let mut rng = spawn_game_rng(seed, 0);
    let sides = [random_side(&mut rng), random_side(&mut rng)];
    let to_move = PlayerId::new(rng.random_range(0..2)).unwrap();
    CardonomiconState::new(sides, to_move, rng.random_range(1..=40))
}

fn brute_force_moves(game: &Cardonomicon, s: &CardonomiconState) -> BTreeSet<CardMove> {
    let me = s.side(s.to_move());
    let foe = s.side(s.to_move().opponent());
    let mut out = BTreeSet::new();
    for &id in me.hand() {
        if game.cards().card(id).mana_cost <= me.mana_available() {
            out.insert(CardMove::Play(id));
        }
    }
    let targets: Vec<Target> =
        foe.board().iter().map(|c| Target::Card(c.card())).chain([Target::Hero]).collect();
    for a in me.board().iter().filter(|c| c.can_attack()) {
        for &t in &targets {
            out.insert(CardMove::Attack(a.card(), t));
        }
    }
    out.insert(CardMove::EndTurn);
    out
}

fn health_of(side: &PlayerSide, id: u8) -> Option<i32> {
    side.board().iter().find(|c| c.card() == id).map(|c| c.health())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn card_legal_moves_match_cross_product(seed in any::<u64>()) {
        let game = Cardonomicon::with_default_cards();
        let s = random_card_state(seed);
        let moves = game.legal_moves(&s);
        prop_assert_eq!(moves.last(), Some(&CardMove::EndTurn));
        let set: BTreeSet<CardMove> = moves.iter().copied().collect();
        prop_assert_eq!(set.len(), moves.len());
        prop_assert_eq!(set, brute_force_moves(&game, &s));
    }

    #[test]
    fn card_attacks_trade_damage(seed in any::<u64>()) {
        let game = Cardonomicon::with_default_cards();
        let s = random_card_state(seed);
        let me = s.to_move();
        let mut rng = spawn_game_rng(seed, 1);
        for mv in game.legal_moves(&s) {
            let CardMove::Attack(a, target) = mv else { continue };
            let mut next = s.clone();
            game.play(&mut next, &mv, &mut rng).unwrap();
            let atk = game.cards().card(a).attack as i32;
            let before_a = health_of(s.side(me), a).unwrap();
            match target {
                Target::Hero => {
                    prop_assert_eq!(next.side(me.opponent()).hero_health(), s.side(me.opponent()).hero_health() - atk);
                    prop_assert_eq!(health_of(next.side(me), a), Some(before_a));
                }
                Target::Card(t) => {
                    let def = game.cards().card(t).attack as i32;
                    let before_t = health_of(s.side(me.opponent()), t).unwrap();
                    let expect_t = before_t - atk;
                    let expect_a = before_a - def;
                    prop_assert_eq!(health_of(next.side(me.opponent()), t), (expect_t > 0).then_some(expect_t));
                    prop_assert_eq!(health_of(next.side(me), a), (expect_a > 0).then_some(expect_a));
                }
            }
            if let Some(c) = next.side(me).board().iter().find(|c| c.card() == a) {
                prop_assert!(!c.can_attack());
            }
        }
    }

    #[test]
    fn card_random_games_keep_invariants(seed in any::<u64>()) {
        let game = Cardonomicon::with_default_cards();
        let mut rng = spawn_game_rng(seed, 0);
        let mut s = game.new_game(&mut rng);
        let mut spent = 0;
        let mut turn = s.turn();
        let mut steps = 0;
        while !game.outcome(&s).is_terminal() {
            for p in PlayerId::BOTH {
                prop_assert_eq!(s.side(p).card_total(), DECK_SIZE + 1);
                prop_assert!(s.side(p).mana_available() <= s.side(p).mana_cap());
            }
            let mover = s.to_move();
            let mv = *game.legal_moves(&s).choose(&mut rng).unwrap();
            if let CardMove::Play(id) = mv {
                spent += game.cards().card(id).mana_cost;
            }
            prop_assert!(spent <= s.side(mover).mana_cap());
            game.play(&mut s, &mv, &mut rng).unwrap();
            if s.turn() != turn {
                prop_assert_eq!(s.turn(), turn + 1);
                turn = s.turn();
                spent = 0;
            }
            steps += 1;
            prop_assert!(steps < 10_000);
        }
        prop_assert!(s.turn() <= game.turn_cap() + 1);
        let o = game.outcome(&s);
        for p in PlayerId::BOTH {
            prop_assert_eq!(reward(&game, &s, p).unwrap(), -reward(&game, &s, p.opponent()).unwrap());
        }
        if let Outcome::Win(w) = o {
            prop_assert!(s.side(w.opponent()).hero_health() <= 0);
            prop_assert!(s.side(w).hero_health() > 0);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn scrabble_random_games_keep_invariants(seed in any::<u64>()) {
        let game = Scrabble::with_default_dictionary();
        let mut rng = spawn_game_rng(seed, 0);
        let mut s = game.new_game(&mut rng);
        let inventory = s.tile_inventory();
        let standard: Vec<u32> = game.tiles().counts().iter().map(|&c| c as u32).collect();
        prop_assert_eq!(&inventory[..], &standard[..]);
        let mut steps = 0;
        while !game.outcome(&s).is_terminal() {
            let before = s.scores();
            let mover = s.to_move();
            let moves = game.legal_moves(&s);
            prop_assert!(!moves.is_empty());
            let mv = moves.choose(&mut rng).unwrap().clone();
            game.play(&mut s, &mv, &mut rng).unwrap();
            prop_assert_eq!(s.tile_inventory(), inventory);
            prop_assert!(s.score(mover) >= before[mover.index()]);
            prop_assert_eq!(s.score(mover.opponent()), before[mover.opponent().index()]);
            prop_assert!(s.rack(mover).len() == 7 || s.bag_len() == 0);
            steps += 1;
            prop_assert!(steps < 1_000);
        }
        for p in PlayerId::BOTH {
            prop_assert_eq!(reward(&game, &s, p).unwrap(), -reward(&game, &s, p.opponent()).unwrap());
        }
        if let Outcome::Win(w) = game.outcome(&s) {
            prop_assert!(s.score(w) >= s.score(w.opponent()));
        }
    }
}
