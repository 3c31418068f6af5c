//! Cardonomicon: a two-player creature-combat card game.
//!
//! Each player owns one copy of a shared 20-card deck and a hero with 20
//! health. On their turn a player may play cards they can afford, attack
//! with cards that were already on the board when the turn began, and finally
//! end the turn. Attacks damage both sides; heroes deal no damage back. A
//! player whose hero drops to 0 or below loses. Games that reach the turn
//! cap are draws.

use std::collections::{BTreeMap, HashSet};
use std::sync::Arc;

use rand::Rng;
use serde::Deserialize;

use crate::error::{Error, Result};
use crate::game::{Game, MoveLabel, Outcome, PlayerId, END_TURN_LABEL};

pub const DECK_SIZE: usize = 20;
pub const HERO_HEALTH: i32 = 20;
pub const MAX_MANA: u32 = 10;
pub const DEFAULT_STARTING_HAND: usize = 4;
pub const DEFAULT_TURN_CAP: u32 = 100;
pub const HERO_LABEL: &str = "HERO";

/// The card set shipped with the crate.
pub const DEFAULT_CARDSET: &str = include_str!("../data/cardset.toml");

#[derive(Clone, Debug, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CardDef {
    pub name: String,
    pub mana_cost: u32,
    pub attack: u32,
    pub health: u32,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct CardFile {
    card: Vec<CardDef>,
}

/// The validated 20-card template both players copy.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CardSet {
    cards: Vec<CardDef>,
}

impl CardSet {
    /// Parses `[[card]]` tables with `name`, `mana_cost`, `attack`, `health`.
    pub fn load(toml_text: &str) -> Result<Self> {
        let file: CardFile =
            toml::from_str(toml_text).map_err(|e| Error::input(format!("card set: {e}")))?;
        CardSet::new(file.card)
    }

    pub fn new(cards: Vec<CardDef>) -> Result<Self> {
        if cards.len() != DECK_SIZE {
            return Err(Error::input(format!(
                "card set has {} cards, a deck needs exactly {DECK_SIZE}",
                cards.len()
            )));
        }
        let mut seen = HashSet::new();
        for c in &cards {
            if c.name.is_empty() || c.name.contains(['>', '|']) || c.name == HERO_LABEL {
                return Err(Error::input(format!("card name {:?} is not allowed", c.name)));
            }
            if !seen.insert(c.name.as_str()) {
                return Err(Error::input(format!("duplicate card name {:?}", c.name)));
            }
            if c.health < 1 {
                return Err(Error::input(format!("card {:?} needs health >= 1", c.name)));
            }
        }
        Ok(CardSet { cards })
    }

    pub fn default_set() -> Self {
        CardSet::load(DEFAULT_CARDSET).expect("bundled card set is valid")
    }

    pub fn cards(&self) -> &[CardDef] {
        &self.cards
    }

    pub fn card(&self, id: CardId) -> &CardDef {
        &self.cards[id as usize]
    }

    pub fn find(&self, name: &str) -> Option<CardId> {
        self.cards.iter().position(|c| c.name == name).map(|i| i as CardId)
    }
}

/// Index into the card set. Names are unique, so within one player's side the
/// index also identifies the card instance.
pub type CardId = u8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CardInstance {
    card: CardId,
    health: i32,
    can_attack: bool,
}

impl CardInstance {
    pub fn new(card: CardId, health: i32, can_attack: bool) -> Self {
        CardInstance { card, health, can_attack }
    }

    pub fn card(&self) -> CardId {
        self.card
    }

    pub fn health(&self) -> i32 {
        self.health
    }

    pub fn can_attack(&self) -> bool {
        self.can_attack
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PlayerSide {
    hero_health: i32,
    deck: Vec<CardId>,
    hand: Vec<CardId>,
    board: Vec<CardInstance>,
    graveyard: usize,
    mana_cap: u32,
    mana_available: u32,
}

impl PlayerSide {
    /// A side as laid out mid-game; `graveyard` is derived from the missing cards.
    pub fn new(
        hero_health: i32,
        deck: Vec<CardId>,
        hand: Vec<CardId>,
        board: Vec<CardInstance>,
        mana_cap: u32,
        mana_available: u32,
    ) -> Result<Self> {
        let mut seen = [false; DECK_SIZE];
        for id in deck.iter().chain(&hand).copied().chain(board.iter().map(|c| c.card)) {
            match seen.get_mut(id as usize) {
                Some(slot) if !*slot => *slot = true,
                _ => return Err(Error::input(format!("card {id} out of range or duplicated"))),
            }
        }
        if mana_cap > MAX_MANA || mana_available > mana_cap {
            return Err(Error::input("mana out of range"));
        }
        let graveyard = DECK_SIZE - seen.iter().filter(|&&s| s).count();
        Ok(PlayerSide { hero_health, deck, hand, board, graveyard, mana_cap, mana_available })
    }

    fn fresh() -> Self {
        PlayerSide {
            hero_health: HERO_HEALTH,
            deck: (0..DECK_SIZE as CardId).collect(),
            hand: Vec::new(),
            board: Vec::new(),
            graveyard: 0,
            mana_cap: 0,
            mana_available: 0,
        }
    }

    pub fn hero_health(&self) -> i32 {
        self.hero_health
    }

    /// Undrawn cards. Draws pick uniformly from this pool.
    pub fn deck(&self) -> &[CardId] {
        &self.deck
    }

    pub fn hand(&self) -> &[CardId] {
        &self.hand
    }

    pub fn board(&self) -> &[CardInstance] {
        &self.board
    }

    pub fn graveyard(&self) -> usize {
        self.graveyard
    }

    /// Zero until the player's first turn, then 1..=10.
    pub fn mana_cap(&self) -> u32 {
        self.mana_cap
    }

    pub fn mana_available(&self) -> u32 {
        self.mana_available
    }

    /// Cards in deck, hand, board and graveyard plus the hero: always 21.
    pub fn card_total(&self) -> usize {
        self.deck.len() + self.hand.len() + self.board.len() + self.graveyard + 1
    }

    fn draw<R: Rng + ?Sized>(&mut self, rng: &mut R) {
        if !self.deck.is_empty() {
            let i = rng.random_range(0..self.deck.len());
            self.hand.push(self.deck.swap_remove(i));
        }
    }

    fn start_turn<R: Rng + ?Sized>(&mut self, rng: &mut R) {
        self.mana_cap = (self.mana_cap + 1).min(MAX_MANA);
        self.mana_available = self.mana_cap;
        self.draw(rng);
        for c in &mut self.board {
            c.can_attack = true;
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Target {
    Card(CardId),
    Hero,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CardMove {
    Play(CardId),
    Attack(CardId, Target),
    EndTurn,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CardonomiconState {
    sides: [PlayerSide; 2],
    to_move: PlayerId,
    turn: u32,
}

impl CardonomiconState {
    /// `turn` is 1-based and counts every player's turn.
    pub fn new(sides: [PlayerSide; 2], to_move: PlayerId, turn: u32) -> Self {
        CardonomiconState { sides, to_move, turn }
    }

    pub fn side(&self, p: PlayerId) -> &PlayerSide {
        &self.sides[p.index()]
    }

    pub fn to_move(&self) -> PlayerId {
        self.to_move
    }

    pub fn turn(&self) -> u32 {
        self.turn
    }
}

#[derive(Clone, Debug)]
pub struct Cardonomicon {
    cards: Arc<CardSet>,
    starting_hand: usize,
    turn_cap: u32,
}

impl Cardonomicon {
    pub fn new(cards: Arc<CardSet>) -> Self {
        Cardonomicon { cards, starting_hand: DEFAULT_STARTING_HAND, turn_cap: DEFAULT_TURN_CAP }
    }

    pub fn with_default_cards() -> Self {
        Cardonomicon::new(Arc::new(CardSet::default_set()))
    }

    pub fn with_starting_hand(mut self, n: usize) -> Self {
        self.starting_hand = n.min(DECK_SIZE);
        self
    }

    pub fn with_turn_cap(mut self, cap: u32) -> Self {
        self.turn_cap = cap;
        self
    }

    pub fn cards(&self) -> &CardSet {
        &self.cards
    }

    pub fn turn_cap(&self) -> u32 {
        self.turn_cap
    }

    pub fn card_name(&self, id: CardId) -> &str {
        &self.cards.card(id).name
    }

    pub fn evaluate_state(&self, state: &CardonomiconState) -> Outcome {
        for p in PlayerId::BOTH {
            if state.side(p).hero_health <= 0 {
                return Outcome::Win(p.opponent());
            }
        }
        if state.turn > self.turn_cap {
            Outcome::Draw
        } else {
            Outcome::Ongoing
        }
    }

    fn check_legal(&self, state: &CardonomiconState, mv: &CardMove) -> Result<()> {
        let me = state.side(state.to_move);
        let foe = state.side(state.to_move.opponent());
        let ok = match *mv {
            CardMove::Play(id) => {
                me.hand.contains(&id) && self.cards.card(id).mana_cost <= me.mana_available
            }
            CardMove::Attack(a, t) => {
                me.board.iter().any(|c| c.card == a && c.can_attack)
                    && match t {
                        Target::Hero => true,
                        Target::Card(id) => foe.board.iter().any(|c| c.card == id),
                    }
            }
            CardMove::EndTurn => true,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::contract(format!("illegal move {}", self.move_label(mv))))
        }
    }
}

impl Game for Cardonomicon {
    type State = CardonomiconState;
    type Move = CardMove;

    fn domain(&self) -> &'static str {
        "cardonomicon"
    }

    fn new_game<R: Rng + ?Sized>(&self, rng: &mut R) -> CardonomiconState {
        let mut sides = [PlayerSide::fresh(), PlayerSide::fresh()];
        for side in &mut sides {
            for _ in 0..self.starting_hand {
                side.draw(rng);
            }
        }
        sides[0].start_turn(rng);
        CardonomiconState { sides, to_move: PlayerId::FIRST, turn: 1 }
    }

    /// Plays in hand order, then attacks by attacker and target board order
    /// (hero last), then `EndTurn`.
    fn legal_moves(&self, state: &CardonomiconState) -> Vec<CardMove> {
        let me = state.side(state.to_move);
        let foe = state.side(state.to_move.opponent());
        let mut moves: Vec<CardMove> = me
            .hand
            .iter()
            .filter(|&&id| self.cards.card(id).mana_cost <= me.mana_available)
            .map(|&id| CardMove::Play(id))
            .collect();
        for a in me.board.iter().filter(|c| c.can_attack) {
            for t in &foe.board {
                moves.push(CardMove::Attack(a.card, Target::Card(t.card)));
            }
            moves.push(CardMove::Attack(a.card, Target::Hero));
        }
        moves.push(CardMove::EndTurn);
        moves
    }

    fn play<R: Rng + ?Sized>(&self, state: &mut CardonomiconState, mv: &CardMove, rng: &mut R) -> Result<()> {
        if self.evaluate_state(state).is_terminal() {
            return Err(Error::contract("move on a finished game"));
        }
        self.check_legal(state, mv)?;
        let me = state.to_move.index();
        let foe = 1 - me;
        match *mv {
            CardMove::Play(id) => {
                let side = &mut state.sides[me];
                let def = self.cards.card(id);
                side.mana_available -= def.mana_cost;
                side.hand.retain(|&c| c != id);
                side.board.push(CardInstance::new(id, def.health as i32, false));
            }
            CardMove::Attack(a, t) => {
                let power = self.cards.card(a).attack as i32;
                let retaliation = match t {
                    Target::Hero => {
                        state.sides[foe].hero_health -= power;
                        0
                    }
                    Target::Card(id) => {
                        let side = &mut state.sides[foe];
                        let i = side.board.iter().position(|c| c.card == id).expect("checked");
                        side.board[i].health -= power;
                        if side.board[i].health <= 0 {
                            side.board.remove(i);
                            side.graveyard += 1;
                        }
                        self.cards.card(id).attack as i32
                    }
                };
                let side = &mut state.sides[me];
                let i = side.board.iter().position(|c| c.card == a).expect("checked");
                side.board[i].can_attack = false;
                side.board[i].health -= retaliation;
                if side.board[i].health <= 0 {
                    side.board.remove(i);
                    side.graveyard += 1;
                }
            }
            CardMove::EndTurn => {
                state.turn += 1;
                state.to_move = state.to_move.opponent();
                if state.turn <= self.turn_cap {
                    state.sides[foe].start_turn(rng);
                }
            }
        }
        Ok(())
    }

    fn current_player(&self, state: &CardonomiconState) -> PlayerId {
        state.to_move
    }

    fn outcome(&self, state: &CardonomiconState) -> Outcome {
        self.evaluate_state(state)
    }

    fn move_label(&self, mv: &CardMove) -> MoveLabel {
        match *mv {
            CardMove::Play(id) => MoveLabel::new(format!("play:{}", self.card_name(id))),
            CardMove::Attack(a, t) => {
                let target = match t {
                    Target::Card(id) => self.card_name(id),
                    Target::Hero => HERO_LABEL,
                };
                MoveLabel::new(format!("attack:{}>{}", self.card_name(a), target))
            }
            CardMove::EndTurn => MoveLabel::new(END_TURN_LABEL),
        }
    }

    fn state_summary(&self, state: &CardonomiconState) -> BTreeMap<String, i64> {
        let mut out = BTreeMap::new();
        for p in PlayerId::BOTH {
            let s = state.side(p);
            let i = p.index();
            out.insert(format!("hero{i}"), s.hero_health as i64);
            out.insert(format!("board{i}"), s.board.len() as i64);
            out.insert(format!("hand{i}"), s.hand.len() as i64);
            out.insert(format!("mana_cap{i}"), s.mana_cap as i64);
        }
        out.insert("turn".to_owned(), state.turn as i64);
        out
    }
}
