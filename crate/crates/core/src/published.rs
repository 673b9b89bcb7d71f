//! Values as printed in the published tables and lists, kept verbatim so
//! that computed output can be diffed against them.
//!
//! Printed entries are strings because some of them are not well-formed
//! integers. Every known disagreement is listed in [`KNOWN_DISCREPANCIES`];
//! computed values are authoritative in each case.

use num_bigint::BigUint;

use crate::sequences::{SequenceId, SequenceTables};

/// A printed run of consecutive values of one sequence.
#[derive(Clone, Copy, Debug)]
pub struct PublishedList {
    pub id: SequenceId,
    pub location: &'static str,
    /// `n` of the first entry.
    pub first_n: usize,
    pub entries: &'static [&'static str],
}

impl PublishedList {
    pub fn last_n(&self) -> usize {
        self.first_n + self.entries.len() - 1
    }

    /// `(n, printed)` pairs.
    pub fn indexed(&self) -> impl Iterator<Item = (usize, &'static str)> + '_ {
        self.entries
            .iter()
            .enumerate()
            .map(move |(i, &e)| (self.first_n + i, e))
    }
}

/// A printed entry that differs from the computed value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Discrepancy {
    pub id: SequenceId,
    pub location: &'static str,
    pub n: usize,
    pub printed: &'static str,
    pub computed: BigUint,
}

impl std::fmt::Display for Discrepancy {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "published {} prints {} for {} at n = {}; computed value is {}",
            self.location, self.printed, self.id, self.n, self.computed
        )
    }
}

/// `(id, location, n)` of every printed entry known to be wrong:
/// dropped or extra leading digits, a stray `13+`, a truncated final entry,
/// and three slips in the convergence table.
pub const KNOWN_DISCREPANCIES: &[(SequenceId, &str, usize)] = &[
    (SequenceId::Y, "list of the first ten y_n", 10),
    (SequenceId::D3, "list of d#3 from n = 2", 14),
    (SequenceId::D1, "list of d#1 from n = 2", 19),
    (SequenceId::D1, "list of d#1 from n = 2", 23),
    (SequenceId::K3, "list of k#3 from n = 2", 19),
    (SequenceId::K3, "list of k#3 from n = 2", 25),
    (SequenceId::K1, "list of k#1 from n = 2", 6),
    (SequenceId::F, "convergence table, column f_n", 2),
    (SequenceId::F, "convergence table, column f_n", 8),
    (SequenceId::G, "convergence table, column g_n", 5),
];

/// Largest `n` appearing in any list.
pub fn max_n() -> usize {
    LISTS.iter().map(PublishedList::last_n).max().unwrap_or(0)
}

/// Printed entries of `list` that differ from `tables`.
///
/// `tables` must reach `list.last_n()`.
pub fn discrepancies(tables: &SequenceTables, list: &PublishedList) -> Vec<Discrepancy> {
    diff_upto(tables, list, list.last_n())
}

/// Discrepancies affecting `id` for `n <= n_max`, across every list.
pub fn discrepancies_for(
    tables: &SequenceTables,
    id: SequenceId,
    n_max: usize,
) -> Vec<Discrepancy> {
    LISTS
        .iter()
        .filter(|l| l.id == id)
        .flat_map(|l| diff_upto(tables, l, n_max))
        .collect()
}

fn diff_upto(tables: &SequenceTables, list: &PublishedList, n_max: usize) -> Vec<Discrepancy> {
    list.indexed()
        .take_while(|&(n, _)| n <= n_max)
        .filter_map(|(n, printed)| {
            let computed = tables.get(list.id, n).expect("tables cover the list");
            (printed != computed.to_string()).then(|| Discrepancy {
                id: list.id,
                location: list.location,
                n,
                printed,
                computed: computed.clone(),
            })
        })
        .collect()
}

pub const LISTS: &[PublishedList] = &[
    PublishedList {
        id: SequenceId::G,
        location: "table of g_n",
        first_n: 1,
        entries: &[
            "2",
            "4",
            "16",
            "80",
            "448",
            "2688",
            "16896",
            "109824",
            "732160",
            "4978688",
            "34398208",
            "240787456",
        ],
    },
    PublishedList {
        id: SequenceId::Cat,
        location: "summary table, row C_n",
        first_n: 1,
        entries: &[
            "1", "1", "2", "5", "14", "42", "132", "429", "1430", "4862", "16796",
        ],
    },
    PublishedList {
        id: SequenceId::G,
        location: "summary table, row g_n",
        first_n: 1,
        entries: &[
            "2", "4", "16", "80", "448", "2688", "16896", "109824", "732160", "4978688", "34398208",
        ],
    },
    PublishedList {
        id: SequenceId::F,
        location: "summary table, row f_n",
        first_n: 1,
        entries: &[
            "1", "1", "4", "19", "104", "614", "3816", "24595", "162896", "1101922", "7580904",
        ],
    },
    PublishedList {
        id: SequenceId::T1,
        location: "summary table, row t#1",
        first_n: 1,
        entries: &[
            "0", "1", "6", "33", "194", "1198", "7676", "50581", "340682", "2335186", "16237284",
        ],
    },
    PublishedList {
        id: SequenceId::T2,
        location: "summary table, row t#2",
        first_n: 1,
        entries: &[
            "0", "1", "4", "19", "104", "614", "3816", "24595", "162896", "1101922", "7580904",
        ],
    },
    PublishedList {
        id: SequenceId::T3,
        location: "summary table, row t#3",
        first_n: 1,
        entries: &[
            "0", "1", "2", "9", "46", "262", "1588", "10053", "65686", "439658", "2999116",
        ],
    },
    PublishedList {
        id: SequenceId::F,
        location: "list of the first ten f_n",
        first_n: 1,
        entries: &[
            "1", "1", "4", "19", "104", "614", "3816", "24595", "162896", "1101922",
        ],
    },
    PublishedList {
        id: SequenceId::T3,
        location: "list of t#3 from n = 2",
        first_n: 2,
        entries: &[
            "1",
            "2",
            "9",
            "46",
            "262",
            "1588",
            "10053",
            "65686",
            "439658",
            "2999116",
            "20774154",
            "145726348",
            "1033125004",
            "7390626280",
            "53281906861",
            "386732675046",
            "2823690230850",
            "20725376703324",
            "152833785130398",
            "1131770853856100",
            "8412813651862868",
        ],
    },
    PublishedList {
        id: SequenceId::T1,
        location: "list of t#1 from n = 2",
        first_n: 2,
        entries: &[
            "1",
            "6",
            "33",
            "194",
            "1198",
            "7676",
            "50581",
            "340682",
            "2335186",
            "16237284",
            "114255994",
            "812107412",
            "5822171548",
            "42052209400",
            "305714145869",
            "2235262899418",
            "16426616425002",
            "121265916776148",
            "898878250833358",
            "6687497426512700",
            "49920590244564484",
        ],
    },
    PublishedList {
        id: SequenceId::Y,
        location: "list of the first ten y_n",
        first_n: 1,
        entries: &[
            "1", "1", "6", "29", "162", "978", "6156", "40061", "267338", "819238",
        ],
    },
    PublishedList {
        id: SequenceId::D3,
        location: "list of d#3 from n = 2",
        first_n: 2,
        entries: &[
            "1",
            "4",
            "19",
            "108",
            "646",
            "4056",
            "26355",
            "175628",
            "1193906",
            "8246856",
            "57716798",
            "408391736",
            "13+2916689516",
            "20997741104",
            "152218453443",
            "1110202813836",
            "8140864778810",
            "59981252880360",
            "443834410644618",
            "3296876425605992",
            "24575508928455572",
            "183773880824034512",
            "1378248141659861486",
            "10364040821146016568",
        ],
    },
    PublishedList {
        id: SequenceId::D1,
        location: "list of d#1 from n = 2",
        first_n: 2,
        entries: &[
            "1",
            "2",
            "13",
            "70",
            "418",
            "2628",
            "17053",
            "113566",
            "771638",
            "5327804",
            "37274482",
            "263669500",
            "1882630692",
            "13550468360",
            "98212733277",
            "716195167502",
            "5250931034798",
            "8683418448780",
            "286206574421222",
            "2125766544922612",
            "15844332066531484",
            "3118472460044221368",
            "888436633672089842",
            "6680306733514013388",
        ],
    },
    PublishedList {
        id: SequenceId::K3,
        location: "list of k#3 from n = 2",
        first_n: 2,
        entries: &[
            "1",
            "4",
            "19",
            "100",
            "566",
            "3384",
            "21107",
            "136084",
            "900674",
            "6087496",
            "41850366",
            "291766952",
            "2057964492",
            "14659421040",
            "105305580483",
            "761981900724",
            "5548736343434",
            "0632122219688",
            "299017702596554",
            "2210275626304248",
            "16403005547059508",
            "122169144755555088",
            "912887876722311406",
            "684174390763667239",
        ],
    },
    PublishedList {
        id: SequenceId::K1,
        location: "list of k#1 from n = 2",
        first_n: 2,
        entries: &[
            "1",
            "6",
            "37",
            "234",
            "514",
            "9996",
            "67181",
            "458562",
            "3172478",
            "22206420",
            "157027938",
            "1120292388",
            "8055001716",
            "58314533400",
            "424740506109",
            "3110401363122",
            "22888001498102",
            "169155516667524",
            "1255072594261142",
            "9345400450314924",
            "69812926066668044",
            "523072984217339304",
            "3929809142578361938",
            "29598511892723647860",
        ],
    },
    PublishedList {
        id: SequenceId::F,
        location: "convergence table, column f_n",
        first_n: 1,
        entries: &[
            "1", "2", "4", "19", "104", "614", "3816", "424595", "162896", "1101922",
        ],
    },
    PublishedList {
        id: SequenceId::G,
        location: "convergence table, column g_n",
        first_n: 1,
        entries: &[
            "2", "4", "16", "80", "428", "2688", "16896", "109824", "732160", "4978688",
        ],
    },
    PublishedList {
        id: SequenceId::T1,
        location: "convergence table, column t#1",
        first_n: 2,
        entries: &[
            "1", "6", "33", "194", "1198", "7676", "50581", "340682", "2335186",
        ],
    },
    PublishedList {
        id: SequenceId::T3,
        location: "convergence table, column t#3",
        first_n: 2,
        entries: &[
            "1", "2", "9", "46", "262", "1588", "10053", "65686", "439658",
        ],
    },
];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn only_known_discrepancies() {
        let tables = SequenceTables::compute(max_n());
        let found: Vec<(SequenceId, &str, usize)> = LISTS
            .iter()
            .flat_map(|l| discrepancies(&tables, l))
            .map(|d| (d.id, d.location, d.n))
            .collect();
        assert_eq!(found, KNOWN_DISCREPANCIES);
    }

    #[test]
    fn k1_typo_is_reported() {
        let tables = SequenceTables::compute(6);
        let found = discrepancies_for(&tables, SequenceId::K1, 6);
        assert_eq!(found.len(), 1);
        assert_eq!(found[0].printed, "514");
        assert_eq!(found[0].computed, BigUint::from(1514u32));
        assert!(discrepancies_for(&tables, SequenceId::K1, 5).is_empty());
    }

    #[test]
    fn y_tenth_term_is_recomputed() {
        let tables = SequenceTables::compute(10);
        let found = discrepancies_for(&tables, SequenceId::Y, 10);
        assert_eq!(found.len(), 1);
        assert_eq!(found[0].computed, BigUint::from(1_819_238u32));
    }
}
