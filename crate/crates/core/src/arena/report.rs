use std::fmt::Write as _;

use super::{AgentSpec, MatchStats, Summary, LEVELS};

pub const CSV_HEADER: &str = "level,player_a,player_b,games,wins_a,draws,wins_b,avg_plies,std_plies,\
avg_caps_a,std_caps_a,avg_caps_b,std_caps_b,avg_overrides_a,std_overrides_a";

const NOT_APPLICABLE: &str = "NOT APPLICABLE";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Csv,
    Markdown,
}

/// `mean(std)` with two decimals each, e.g. `25.17(0.41)`.
pub fn cell(mean: f64, std: f64) -> String {
    format!("{mean:.2}({std:.2})")
}

fn summary_cell(s: Summary) -> String {
    cell(s.mean, s.std)
}

/// CSV fields may not carry separators or quotes; agent names never do, but
/// user-supplied roster names might.
fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Match statistics as CSV or as a Markdown table with `mean(std)` cells.
/// Plies are counted per player move.
pub fn render_stats(stats: &[MatchStats], format: ReportFormat) -> String {
    let mut out = String::new();
    match format {
        ReportFormat::Csv => {
            out.push_str(CSV_HEADER);
            out.push('\n');
            for s in stats {
                writeln!(
                    out,
                    "{},{},{},{},{},{},{},{:.2},{:.2},{:.2},{:.2},{:.2},{:.2},{:.2},{:.2}",
                    csv_field(&s.level),
                    csv_field(&s.player_a),
                    csv_field(&s.player_b),
                    s.games,
                    s.wins_a,
                    s.draws,
                    s.wins_b,
                    s.plies.mean,
                    s.plies.std,
                    s.caps_a.mean,
                    s.caps_a.std,
                    s.caps_b.mean,
                    s.caps_b.std,
                    s.overrides_a.mean,
                    s.overrides_a.std,
                )
                .unwrap();
            }
        }
        ReportFormat::Markdown => {
            out.push_str(
                "| LEVEL | PLAYER A | PLAYER B | GAMES | WINS A | DRAWS | WINS B | AVERAGE(PLIES) \
                 | SEEDS CAPTURED BY A(STD) | SEEDS CAPTURED BY B(STD) | OVERRIDES |\n",
            );
            out.push_str("|---|---|---|---|---|---|---|---|---|---|---|\n");
            for s in stats {
                let overrides =
                    if s.overrides_applicable { summary_cell(s.overrides_a) } else { NOT_APPLICABLE.to_string() };
                writeln!(
                    out,
                    "| {} | {} | {} | {} | {} | {} | {} | {} | {} | {} | {} |",
                    s.level,
                    s.player_a,
                    s.player_b,
                    s.games,
                    s.wins_a,
                    s.draws,
                    s.wins_b,
                    summary_cell(s.plies),
                    summary_cell(s.caps_a),
                    summary_cell(s.caps_b),
                    overrides,
                )
                .unwrap();
            }
        }
    }
    out
}

/// Which techniques an agent uses and which proxy levels it beat.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CapabilityRow {
    pub agent: String,
    pub supervised: bool,
    pub unsupervised: bool,
    pub uses_minimax: bool,
    pub uses_endgame: bool,
    /// Won more games than it lost, per level in [`LEVELS`] order.
    pub levels: [bool; 4],
}

/// Capability rows from ladder results; `ladders[i]` holds the four level
/// results of `agents[i]`.
pub fn capability_rows(agents: &[(String, AgentSpec)], ladders: &[Vec<MatchStats>]) -> Vec<CapabilityRow> {
    agents
        .iter()
        .zip(ladders)
        .map(|((name, spec), ladder)| {
            let mut levels = [false; 4];
            for (flag, level) in levels.iter_mut().zip(LEVELS) {
                *flag = ladder.iter().any(|s| s.level == level && s.wins_a > s.wins_b);
            }
            CapabilityRow {
                agent: name.clone(),
                supervised: spec.supervised(),
                unsupervised: spec.unsupervised(),
                uses_minimax: spec.uses_minimax(),
                uses_endgame: spec.uses_endgame(),
                levels,
            }
        })
        .collect()
}

pub fn render_capabilities(rows: &[CapabilityRow], format: ReportFormat) -> String {
    let yn = |b: bool| if b { "yes" } else { "no" };
    let columns = ["METHOD", "SMLT", "UMLT", "MINIMAX", "ENDGAME"].into_iter().chain(LEVELS).collect::<Vec<_>>();
    let mut out = String::new();
    let (sep, start, end) = match format {
        ReportFormat::Csv => (",", "", ""),
        ReportFormat::Markdown => (" | ", "| ", " |"),
    };
    writeln!(out, "{start}{}{end}", columns.join(sep)).unwrap();
    if format == ReportFormat::Markdown {
        writeln!(out, "|{}", "---|".repeat(columns.len())).unwrap();
    }
    for r in rows {
        let name = match format {
            ReportFormat::Csv => csv_field(&r.agent),
            ReportFormat::Markdown => r.agent.clone(),
        };
        let mut cells = vec![name];
        cells.extend([r.supervised, r.unsupervised, r.uses_minimax, r.uses_endgame].map(|b| yn(b).to_string()));
        cells.extend(r.levels.map(|b| yn(b).to_string()));
        writeln!(out, "{start}{}{end}", cells.join(sep)).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn stats(applicable: bool) -> MatchStats {
        MatchStats {
            level: "AMATEUR".into(),
            player_a: "Casing".into(),
            player_b: "Minimax(3)".into(),
            games: 6,
            wins_a: 5,
            draws: 0,
            wins_b: 1,
            plies: Summary { mean: 48.33, std: 18.8 },
            caps_a: Summary { mean: 25.17, std: 0.41 },
            caps_b: Summary { mean: 14.17, std: 1.6 },
            overrides_a: Summary { mean: 3.0, std: 1.0 },
            overrides_b: Summary::default(),
            overrides_applicable: applicable,
        }
    }

    #[test]
    fn mean_std_cell() {
        assert_eq!(cell(25.17, 0.41), "25.17(0.41)");
        assert_eq!(cell(48.33, 18.8), "48.33(18.80)");
        assert_eq!(cell(7.0, 0.0), "7.00(0.00)");
    }

    #[test]
    fn empty_reports_are_header_only() {
        assert_eq!(render_stats(&[], ReportFormat::Csv), format!("{CSV_HEADER}\n"));
        assert_eq!(render_stats(&[], ReportFormat::Markdown).lines().count(), 2);
        assert_eq!(render_capabilities(&[], ReportFormat::Csv).lines().count(), 1);
    }

    #[test]
    fn csv_row() {
        let csv = render_stats(&[stats(false)], ReportFormat::Csv);
        assert_eq!(
            csv.lines().nth(1).unwrap(),
            "AMATEUR,Casing,Minimax(3),6,5,0,1,48.33,18.80,25.17,0.41,14.17,1.60,3.00,1.00"
        );
    }

    #[test]
    fn markdown_overrides_column() {
        let md = render_stats(&[stats(true), stats(false)], ReportFormat::Markdown);
        assert!(md.contains("| 25.17(0.41) |"));
        assert!(md.lines().nth(2).unwrap().ends_with("| 3.00(1.00) |"));
        assert!(md.lines().nth(3).unwrap().ends_with("| NOT APPLICABLE |"));
    }

    #[test]
    fn capability_matrix() {
        let row = CapabilityRow {
            agent: "Casing".into(),
            supervised: true,
            unsupervised: false,
            uses_minimax: false,
            uses_endgame: false,
            levels: [true, true, false, false],
        };
        let csv = render_capabilities(&[row], ReportFormat::Csv);
        assert_eq!(
            csv,
            "METHOD,SMLT,UMLT,MINIMAX,ENDGAME,INITIATION,BEGINNER,AMATEUR,GRANDMASTER\n\
             Casing,yes,no,no,no,yes,yes,no,no\n"
        );
    }
}
