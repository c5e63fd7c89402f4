//! The `ayo` command line: play, solve, probe, verify, tourney, train.
//!
//! Exit codes: 0 success, 1 domain error, 2 usage error.

use std::ffi::OsString;
use std::io::{BufRead, Write};
use std::path::{Path, PathBuf};
use std::sync::Arc;
use std::time::Instant;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand};
use serde::Deserialize;

use crate::arena::{
    capability_rows, levels_ladder, play_match, render_capabilities, render_stats, run_match_with, AgentSpec,
    MatchOptions, MatchStats, ReportFormat,
};
use crate::cbr::{harvest_episodes, train_perceptron, CbrConfig, EpisodeLibrary, PerceptronModel};
use crate::endgame::{self, rank_moves, verify, EndgameDatabase, MismatchKind, SolveOptions, VerifyMode};
use crate::notation::{format_state, parse_position};
use crate::rules::{new_game, Board, GameConfig, GameState, Move, RulesError, Side, StalemateRule, StatusKind, ROW};
use crate::search::EvalWeights;

#[derive(Debug, Parser)]
#[command(name = "ayo", version, about = "Awale game-search workbench")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Play against an agent on the terminal.
    Play(PlayArgs),
    /// Build an endgame database.
    Solve(SolveArgs),
    /// Look up a position in an endgame database.
    Probe(ProbeArgs),
    /// Check an endgame database against forward search.
    Verify(VerifyArgs),
    /// Run the matches and ladders listed in a roster file.
    Tourney(TourneyArgs),
    /// Harvest an episode library from self-play and train a perceptron on it.
    Train(TrainArgs),
}

#[derive(Debug, Clone, Args)]
struct RulesArgs {
    /// Rule overrides: seeds=N, stalemate=cancelled|mover-loses, repetition=N, max-plies=N
    #[arg(long, value_name = "K=V,...")]
    rules: Option<String>,
    /// Custom opening board, South row then North row: "0,1,1,1,1,0/0,1,1,1,1,0"
    #[arg(long, value_name = "BOARD")]
    start: Option<String>,
}

#[derive(Debug, Args)]
struct PlayArgs {
    /// random[:seed], minimax:D, minimaxcbr:D, casing, db[:D]
    #[arg(long, default_value = "minimax:4")]
    opponent: String,
    /// Side the human plays.
    #[arg(long, default_value = "south", value_parser = ["south", "north"])]
    human: String,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[command(flatten)]
    agent_files: AgentFiles,
    #[command(flatten)]
    rules: RulesArgs,
}

#[derive(Debug, Clone, Args)]
struct AgentFiles {
    /// Episode library for minimaxcbr and casing opponents.
    #[arg(long)]
    library: Option<PathBuf>,
    /// Perceptron model for casing opponents.
    #[arg(long)]
    model: Option<PathBuf>,
    /// Endgame database for db opponents.
    #[arg(long)]
    db: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct SolveArgs {
    #[arg(long)]
    max_seeds: u32,
    #[arg(long)]
    out: PathBuf,
    #[arg(long, default_value_t = 1)]
    workers: usize,
    #[command(flatten)]
    rules: RulesArgs,
}

#[derive(Debug, Args)]
struct ProbeArgs {
    #[arg(long)]
    db: PathBuf,
    /// Position notation: "p0,..,p5/p6,..,p11 S|N capS capN"
    #[arg(long)]
    state: String,
    #[command(flatten)]
    rules: RulesArgs,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long)]
    db: PathBuf,
    /// Check every entry of levels 0..=L (default: all levels).
    #[arg(long, value_name = "L", conflicts_with = "sample")]
    exhaustive: Option<u32>,
    /// Check K entries drawn at random with a fixed seed.
    #[arg(long, value_name = "K")]
    sample: Option<u64>,
    #[command(flatten)]
    rules: RulesArgs,
}

#[derive(Debug, Args)]
struct TourneyArgs {
    #[arg(long)]
    roster: PathBuf,
    #[arg(long)]
    games: u32,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Output directory for tourney.csv, tourney.md and capabilities.csv.
    #[arg(long)]
    out: PathBuf,
    /// Play games one after another instead of in parallel.
    #[arg(long)]
    serial: bool,
}

#[derive(Debug, Args)]
struct TrainArgs {
    #[arg(long)]
    games: u32,
    #[arg(long)]
    out_library: PathBuf,
    #[arg(long)]
    out_model: PathBuf,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Self-play by the database player instead of alpha-beta.
    #[arg(long)]
    db: Option<PathBuf>,
    /// Search depth of the self-play agents.
    #[arg(long, default_value_t = 3)]
    depth: u32,
    /// Keep every move, not only the winner's.
    #[arg(long)]
    all_moves: bool,
    #[arg(long, default_value_t = 50)]
    epochs: u32,
    #[arg(long, default_value_t = 0.1)]
    rate: f64,
    #[command(flatten)]
    rules: RulesArgs,
}

/// Errors caught after argument parsing that still count as usage errors.
#[derive(Debug)]
struct UsageError(String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

fn usage(msg: impl Into<String>) -> anyhow::Error {
    UsageError(msg.into()).into()
}

/// Runs the command line with the given arguments and streams; returns the
/// process exit code.
pub fn run<I, T>(args: I, input: &mut dyn BufRead, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let _ = if code == 0 { write!(out, "{}", e.render()) } else { write!(err, "{}", e.render()) };
            return code;
        }
    };
    let result = match cli.command {
        Command::Play(a) => cmd_play(a, input, out),
        Command::Solve(a) => cmd_solve(a, out),
        Command::Probe(a) => cmd_probe(a, out),
        Command::Verify(a) => cmd_verify(a, out),
        Command::Tourney(a) => cmd_tourney(a, out),
        Command::Train(a) => cmd_train(a, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e:#}");
            if e.is::<UsageError>() {
                2
            } else {
                1
            }
        }
    }
}

fn parse_board(text: &str) -> anyhow::Result<Board> {
    let (south, north) = text.split_once('/').ok_or_else(|| usage(format!("board {text:?} needs a '/'")))?;
    let mut rows = [[0u8; ROW]; 2];
    for (row, part) in rows.iter_mut().zip([south, north]) {
        let counts: Vec<&str> = part.split(',').collect();
        if counts.len() != ROW {
            return Err(usage(format!("board {text:?}: each row needs 6 pit counts")));
        }
        for (pit, c) in row.iter_mut().zip(counts) {
            *pit = c.trim().parse().map_err(|_| usage(format!("board {text:?}: bad count {c:?}")))?;
        }
    }
    Ok(Board::from_rows(rows[0], rows[1]))
}

fn apply_rule(config: &mut GameConfig, key: &str, value: &str) -> anyhow::Result<()> {
    let number = |v: &str| v.parse::<u32>().map_err(|_| usage(format!("rule {key}: bad number {v:?}")));
    match key {
        "seeds" => {
            config.seeds_per_pit =
                u8::try_from(number(value)?).map_err(|_| usage(format!("rule seeds: {value} is too large")))?
        }
        "stalemate" => {
            config.stalemate_rule = match value {
                "cancelled" => StalemateRule::Cancelled,
                "mover-loses" => StalemateRule::MoverLoses,
                _ => return Err(usage(format!("rule stalemate: expected cancelled or mover-loses, got {value:?}"))),
            }
        }
        "repetition" => config.repetition_limit = number(value)?,
        "max-plies" => config.max_plies = number(value)?,
        _ => return Err(usage(format!("unknown rule {key:?}"))),
    }
    Ok(())
}

fn game_config(args: &RulesArgs) -> anyhow::Result<GameConfig> {
    let mut config = GameConfig::default();
    if let Some(rules) = &args.rules {
        for item in rules.split(',').filter(|s| !s.trim().is_empty()) {
            let (k, v) = item.split_once('=').ok_or_else(|| usage(format!("rule {item:?} is not key=value")))?;
            apply_rule(&mut config, k.trim(), v.trim())?;
        }
    }
    if let Some(start) = &args.start {
        config.start = Some(parse_board(start)?);
    }
    config.validate().map_err(|e| usage(e.to_string()))?;
    Ok(config)
}

fn load_library(path: &Path) -> anyhow::Result<Arc<EpisodeLibrary>> {
    Ok(Arc::new(EpisodeLibrary::load(path).with_context(|| format!("loading library {}", path.display()))?))
}

fn load_model(path: &Path) -> anyhow::Result<Arc<PerceptronModel>> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading model {}", path.display()))?;
    Ok(Arc::new(PerceptronModel::from_json(&text)?))
}

fn load_db(path: &Path) -> anyhow::Result<Arc<EndgameDatabase>> {
    Ok(Arc::new(EndgameDatabase::load(path).with_context(|| format!("loading database {}", path.display()))?))
}

/// Parses `kind[:n]` opponent specs for `play`.
fn parse_opponent(text: &str, files: &AgentFiles) -> anyhow::Result<AgentSpec> {
    let (kind, arg) = match text.split_once(':') {
        Some((k, a)) => (k, Some(a)),
        None => (text, None),
    };
    let num = |default: Option<u32>| -> anyhow::Result<u32> {
        match (arg, default) {
            (Some(a), _) => a.parse().map_err(|_| usage(format!("opponent {text:?}: bad number {a:?}"))),
            (None, Some(d)) => Ok(d),
            (None, None) => Err(usage(format!("opponent {text:?} needs a depth, e.g. {kind}:3"))),
        }
    };
    let need =
        |p: &Option<PathBuf>, flag: &str| p.clone().ok_or_else(|| usage(format!("opponent {kind} needs --{flag}")));
    Ok(match kind {
        "random" => AgentSpec::Random {
            seed: arg.map(str::parse).transpose().map_err(|_| usage("bad random seed"))?.unwrap_or(0),
        },
        "minimax" => AgentSpec::minimax(num(None)?),
        "minimaxcbr" => AgentSpec::MinimaxCbr {
            depth: num(None)?,
            weights: EvalWeights::default(),
            library: load_library(&need(&files.library, "library")?)?,
            cbr: CbrConfig::default(),
        },
        "casing" => AgentSpec::Casing {
            library: load_library(&need(&files.library, "library")?)?,
            model: load_model(&need(&files.model, "model")?)?,
            cbr: CbrConfig::default(),
        },
        "db" => AgentSpec::DbPerfect { db: load_db(&need(&files.db, "db")?)?, fallback_depth: num(Some(4))? },
        _ => return Err(usage(format!("unknown opponent kind {kind:?}"))),
    })
}

fn render_board(state: &GameState, human: Side) -> String {
    let b = state.board();
    let cell = |p: usize| format!("[{:>2}]", b.pits[p]);
    let north: String = (ROW..2 * ROW).rev().map(cell).collect();
    let south: String = (0..ROW).map(cell).collect();
    let north_labels: String = (1..=ROW).rev().map(|n| format!("  {n} ")).collect();
    let south_labels: String = (1..=ROW).map(|n| format!("  {n} ")).collect();
    let tag = |s: Side| if s == human { "you" } else { "opponent" };
    format!(
        "{north_labels}  North ({}) captured {}\n{north}\n{south}\n{south_labels}  South ({}) captured {}\n",
        tag(Side::North),
        state.captured(Side::North),
        tag(Side::South),
        state.captured(Side::South),
    )
}

fn pit_label(mv: Move) -> String {
    format!("{}{}", Side::owner_of(mv.index()).letter(), mv.relative() + 1)
}

fn announce(state: &GameState, config: &GameConfig) -> String {
    let status = state.status(config);
    let (s, n) = status.final_captures.unwrap_or((state.captured(Side::South), state.captured(Side::North)));
    let event = match status.kind {
        StatusKind::WinSouth => "South has captured more than half of the seeds".to_string(),
        StatusKind::WinNorth => "North has captured more than half of the seeds".to_string(),
        StatusKind::Draw => "both sides hold half of the seeds".to_string(),
        StatusKind::SplitByRows => "endless play: each side takes the seeds on its own row".to_string(),
        StatusKind::StalemateCancelled => "no move can feed the opponent: the game is cancelled".to_string(),
        StatusKind::StalemateMoverLoses { loser } => {
            format!("{loser:?} cannot feed the opponent and loses")
        }
        StatusKind::Ongoing => "game in progress".to_string(),
    };
    let result = match status.winner() {
        Some(side) => format!("{side:?} wins"),
        None => "draw".to_string(),
    };
    format!("{event}. {result}, South {s} - North {n}.")
}

fn cmd_play(args: PlayArgs, input: &mut dyn BufRead, out: &mut dyn Write) -> anyhow::Result<i32> {
    let config = game_config(&args.rules)?;
    let opponent = parse_opponent(&args.opponent, &args.agent_files)?;
    opponent.validate(&config)?;
    let human = if args.human == "south" { Side::South } else { Side::North };
    let mut agent = opponent.instantiate(args.seed, human.opponent());
    let mut state = new_game(&config)?;
    writeln!(out, "You play {human:?} against {}. Enter a pit 1-6 on your row, or q to quit.", opponent.name())?;
    loop {
        write!(out, "\n{}", render_board(&state, human))?;
        if state.status(&config).is_terminal() {
            writeln!(out, "{}", announce(&state, &config))?;
            return Ok(0);
        }
        let mv = if state.to_move() == human {
            write!(out, "your move> ")?;
            out.flush()?;
            let mut line = String::new();
            if input.read_line(&mut line)? == 0 {
                writeln!(out, "\nend of input; final position: {}", format_state(&state))?;
                return Ok(0);
            }
            let line = line.trim();
            if line == "q" || line == "quit" {
                writeln!(out, "quit; final position: {}", format_state(&state))?;
                return Ok(0);
            }
            let Ok(n @ 1..=6) = line.parse::<usize>() else {
                writeln!(out, "illegal: enter a pit number from 1 to 6")?;
                continue;
            };
            let mv = Move::from_relative(human, n - 1);
            if let Err(reason) = state.board().check_move(human, mv) {
                writeln!(out, "illegal: {reason}")?;
                continue;
            }
            mv
        } else {
            let d = agent.choose(&state, &config).ok_or_else(|| anyhow!("opponent found no move"))?;
            writeln!(out, "{} plays {}", opponent.name(), pit_label(d.mv))?;
            d.mv
        };
        let outcome = state.apply_move(mv, &config).map_err(|e: RulesError| anyhow!(e))?;
        if outcome.captured_now > 0 {
            writeln!(out, "{} captures {}", pit_label(mv), outcome.captured_now)?;
        }
        state = outcome.next;
    }
}

fn cmd_solve(args: SolveArgs, out: &mut dyn Write) -> anyhow::Result<i32> {
    let config = game_config(&args.rules)?;
    let started = Instant::now();
    let mut lines = vec![];
    let db = endgame::solve_with(args.max_seeds, &config, SolveOptions { workers: args.workers }, |r| {
        lines.push(format!(
            "level {}: {} entries, {} eternal, {:.3}s",
            r.level,
            r.entries,
            r.eternal,
            r.elapsed.as_secs_f64()
        ));
    })?;
    for l in lines {
        writeln!(out, "{l}")?;
    }
    db.save(&args.out).with_context(|| format!("writing {}", args.out.display()))?;
    writeln!(
        out,
        "solved {} entries up to {} seeds in {:.3}s; wrote {}",
        db.entry_count(),
        args.max_seeds,
        started.elapsed().as_secs_f64(),
        args.out.display()
    )?;
    Ok(0)
}

fn cmd_probe(args: ProbeArgs, out: &mut dyn Write) -> anyhow::Result<i32> {
    let config = game_config(&args.rules)?;
    let position = parse_position(&args.state).map_err(|e| usage(e.to_string()))?;
    let db = EndgameDatabase::load(&args.db).with_context(|| format!("loading database {}", args.db.display()))?;
    db.check_rules(&config)?;
    let state = GameState::from_position(position);
    let value = endgame::probe(&db, &state)?;
    writeln!(out, "value: {value:+} ({} to move)", state.to_move().letter())?;
    let ranked = rank_moves(&db, &state, &config)?;
    if ranked.is_empty() {
        writeln!(out, "no legal move")?;
    }
    for (i, m) in ranked.iter().enumerate() {
        let best = if i == 0 { "  best" } else { "" };
        writeln!(out, "  {} (pit {}): {:+}, captures {}{best}", pit_label(m.mv), m.mv.pit, m.score, m.captured)?;
    }
    Ok(0)
}

fn cmd_verify(args: VerifyArgs, out: &mut dyn Write) -> anyhow::Result<i32> {
    let config = game_config(&args.rules)?;
    let db = EndgameDatabase::load(&args.db).with_context(|| format!("loading database {}", args.db.display()))?;
    let mode = match (args.exhaustive, args.sample) {
        (_, Some(k)) => VerifyMode::Sampled(k),
        (Some(l), None) => VerifyMode::Exhaustive(l),
        (None, None) => VerifyMode::Exhaustive(db.max_seeds()),
    };
    let started = Instant::now();
    let report = verify(&db, &config, mode);
    writeln!(
        out,
        "checked {} entries ({} eternal) in {:.3}s: {} mismatches",
        report.checked,
        report.eternal,
        started.elapsed().as_secs_f64(),
        report.mismatches.len()
    )?;
    for m in report.mismatches.iter().take(20) {
        let what = match m.kind {
            MismatchKind::Undecodable(e) => format!("undecodable entry {e:?}"),
            MismatchKind::SelfConsistency { stored, expected: Some(e) } => {
                format!("self-consistency: stored {stored:+}, children give {e:+}")
            }
            MismatchKind::SelfConsistency { stored, expected: None } => {
                format!("self-consistency: stored {stored:+}, a child is unreadable")
            }
            MismatchKind::Oracle { stored, oracle } => format!("oracle: stored {stored:+}, forward search {oracle:+}"),
        };
        writeln!(out, "mismatch at level {} rank {}: {what}", m.level, m.rank)?;
    }
    Ok(if report.is_clean() { 0 } else { 1 })
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct Roster {
    #[serde(default)]
    rules: Option<String>,
    #[serde(default)]
    start: Option<String>,
    /// Also run every agent through the four proxy levels.
    #[serde(default)]
    ladder: bool,
    #[serde(default = "default_opening")]
    opening_plies: u32,
    #[serde(rename = "agent")]
    agents: Vec<RosterAgent>,
}

fn default_opening() -> u32 {
    2
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RosterAgent {
    name: Option<String>,
    kind: String,
    depth: Option<u32>,
    seed: Option<u64>,
    weights: Option<[f64; 4]>,
    library: Option<PathBuf>,
    model: Option<PathBuf>,
    db: Option<PathBuf>,
    fallback_depth: Option<u32>,
    alpha: Option<f64>,
    beta: Option<f64>,
}

impl RosterAgent {
    fn spec(&self, base: &Path) -> anyhow::Result<AgentSpec> {
        let file = |p: &Option<PathBuf>, what: &str| -> anyhow::Result<PathBuf> {
            let p = p.as_ref().ok_or_else(|| anyhow!("agent kind {} needs `{what}`", self.kind))?;
            Ok(base.join(p))
        };
        let depth = || self.depth.ok_or_else(|| anyhow!("agent kind {} needs `depth`", self.kind));
        let weights = match self.weights {
            Some(w) => EvalWeights::new(w)?,
            None => EvalWeights::default(),
        };
        let defaults = CbrConfig::default();
        let cbr = CbrConfig::new(self.alpha.unwrap_or(defaults.alpha), self.beta.unwrap_or(defaults.beta))?;
        Ok(match self.kind.as_str() {
            "random" => AgentSpec::Random { seed: self.seed.unwrap_or(0) },
            "minimax" => AgentSpec::Minimax { depth: depth()?, weights },
            "minimaxcbr" => AgentSpec::MinimaxCbr {
                depth: depth()?,
                weights,
                library: load_library(&file(&self.library, "library")?)?,
                cbr,
            },
            "casing" => AgentSpec::Casing {
                library: load_library(&file(&self.library, "library")?)?,
                model: load_model(&file(&self.model, "model")?)?,
                cbr,
            },
            "db" => AgentSpec::DbPerfect {
                db: load_db(&file(&self.db, "db")?)?,
                fallback_depth: self.fallback_depth.unwrap_or(4),
            },
            other => bail!("unknown agent kind {other:?}"),
        })
    }
}

fn cmd_tourney(args: TourneyArgs, out: &mut dyn Write) -> anyhow::Result<i32> {
    let text =
        std::fs::read_to_string(&args.roster).with_context(|| format!("reading roster {}", args.roster.display()))?;
    let roster: Roster = toml::from_str(&text).with_context(|| format!("parsing roster {}", args.roster.display()))?;
    let config = game_config(&RulesArgs { rules: roster.rules.clone(), start: roster.start.clone() })?;
    if args.games == 0 {
        bail!("--games must be at least 1");
    }
    let base = args.roster.parent().unwrap_or(Path::new("."));
    let mut agents = vec![];
    for a in &roster.agents {
        let spec = a.spec(base)?;
        spec.validate(&config)?;
        agents.push((a.name.clone().unwrap_or_else(|| spec.name()), spec));
    }
    if agents.is_empty() {
        bail!("roster lists no agents");
    }
    let options = MatchOptions { swap_sides: true, opening_plies: roster.opening_plies, parallel: !args.serial };

    let mut rows: Vec<MatchStats> = vec![];
    for i in 0..agents.len() {
        for j in i + 1..agents.len() {
            let (na, a) = &agents[i];
            let (nb, b) = &agents[j];
            let mut stats = run_match_with(a, b, args.games, &config, args.seed, &options)?;
            stats.player_a = na.clone();
            stats.player_b = nb.clone();
            writeln!(out, "{na} vs {nb}: {}-{}-{}", stats.wins_a, stats.draws, stats.wins_b)?;
            rows.push(stats);
        }
    }
    let mut ladders = vec![];
    if roster.ladder {
        for (name, spec) in &agents {
            let mut ladder = levels_ladder(spec, args.games, &config, args.seed)?;
            for s in &mut ladder {
                s.player_a = name.clone();
            }
            writeln!(
                out,
                "{name} ladder: {}",
                ladder.iter().map(|s| format!("{}-{}-{}", s.wins_a, s.draws, s.wins_b)).collect::<Vec<_>>().join(", ")
            )?;
            rows.extend(ladder.iter().cloned());
            ladders.push(ladder);
        }
    }

    std::fs::create_dir_all(&args.out).with_context(|| format!("creating {}", args.out.display()))?;
    let mut md = String::from("## Matches\n\nPlies are counted per player move.\n\n");
    md.push_str(&render_stats(&rows, ReportFormat::Markdown));
    let mut files = vec![("tourney.csv", render_stats(&rows, ReportFormat::Csv))];
    if roster.ladder {
        let caps = capability_rows(&agents, &ladders);
        md.push_str("\n## Capabilities\n\nLevels are proxies: Random, then alpha-beta at depths 1, 3 and 5.\n\n");
        md.push_str(&render_capabilities(&caps, ReportFormat::Markdown));
        files.push(("capabilities.csv", render_capabilities(&caps, ReportFormat::Csv)));
    }
    files.push(("tourney.md", md));
    for (name, body) in files {
        let path = args.out.join(name);
        crate::io::write_atomic(&path, body.as_bytes()).with_context(|| format!("writing {}", path.display()))?;
        writeln!(out, "wrote {}", path.display())?;
    }
    Ok(0)
}

fn cmd_train(args: TrainArgs, out: &mut dyn Write) -> anyhow::Result<i32> {
    let config = game_config(&args.rules)?;
    if args.games == 0 {
        bail!("training needs at least one self-play game (the library would be empty)");
    }
    let player = match &args.db {
        Some(path) => AgentSpec::DbPerfect { db: load_db(path)?, fallback_depth: args.depth },
        None => AgentSpec::minimax(args.depth),
    };
    let options = MatchOptions { swap_sides: false, opening_plies: 2, parallel: true };
    let games = play_match(&player, &player, args.games, &config, args.seed, &options)?;
    let records: Vec<_> = games.into_iter().map(|g| g.record).collect();
    let library = harvest_episodes(&records, !args.all_moves);
    writeln!(out, "{} self-play games by {} gave {} episodes", records.len(), player.name(), library.len())?;
    let model = train_perceptron(&library, args.rate, args.epochs)?;
    writeln!(
        out,
        "trained {} epochs; training errors {}",
        model.epochs_trained,
        model.error_history.last().map_or("n/a".to_string(), |e| format!("{e} of {}", library.len()))
    )?;
    library.save(&args.out_library).with_context(|| format!("writing {}", args.out_library.display()))?;
    crate::io::write_atomic(&args.out_model, model.to_json().as_bytes())
        .with_context(|| format!("writing {}", args.out_model.display()))?;
    writeln!(out, "wrote {} and {}", args.out_library.display(), args.out_model.display())?;
    Ok(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str], stdin: &str) -> (i32, String, String) {
        let mut input = stdin.as_bytes();
        let (mut out, mut err) = (vec![], vec![]);
        let code = run(std::iter::once("ayo").chain(args.iter().copied()), &mut input, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn rules_flags() {
        let cfg = game_config(&RulesArgs {
            rules: Some("seeds=3,stalemate=mover-loses,repetition=2,max-plies=500".into()),
            start: None,
        })
        .unwrap();
        assert_eq!(cfg.seeds_per_pit, 3);
        assert_eq!(cfg.stalemate_rule, StalemateRule::MoverLoses);
        assert_eq!((cfg.repetition_limit, cfg.max_plies), (2, 500));
        let bad = game_config(&RulesArgs { rules: Some("colour=blue".into()), start: None }).unwrap_err();
        assert!(bad.is::<UsageError>());
        let v = game_config(&RulesArgs { rules: None, start: Some("0,1,1,1,1,0/0,1,1,1,1,0".into()) }).unwrap();
        assert_eq!(v.total_seeds(), 8);
    }

    #[test]
    fn empty_pit_is_rejected_and_eof_ends_cleanly() {
        let (code, out, _) = run_str(&["play", "--opponent", "minimax:1", "--start", "1,0,0,0,0,1/1,1,1,1,1,1"], "2\n");
        assert_eq!(code, 0);
        assert!(out.contains("illegal: pit is empty"), "{out}");
        assert!(out.contains("end of input; final position: 1,0,0,0,0,1/1,1,1,1,1,1 S 0 0"), "{out}");
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(run_str(&["solve"], "").0, 2);
        assert_eq!(run_str(&["play", "--opponent", "wizard"], "").0, 2);
        assert_eq!(run_str(&["verify", "--db", "x", "--exhaustive", "2", "--sample", "3"], "").0, 2);
    }
}
