// Wire types for the elicitation service JSON API. Field names match the
// server payloads exactly; keep them snake_case.

export type StepsSchedule = "one" | "to_convergence";

export interface SessionConfig {
    policy: string;
    hyperparams: {
        log_log_odds_alpha: number;
        theta_prior: number;
        steps: StepsSchedule;
    };
    seed?: number;
}

export interface CreateResponse {
    id: string;
}

export interface QueryResponse {
    word: string;
    step: number;
}

export interface TopConstraint {
    index: number;
    constraint: string;
    q: number;
}

export interface ProbePrediction {
    word: string;
    p_accept: number;
}

export interface HistoryMeans {
    train: number | null;
    nontrain: number | null;
}

export interface StateSummary {
    step: number;
    posterior_entropy: number;
    top_constraints: TopConstraint[];
    probe_predictions: ProbePrediction[];
    history_means: HistoryMeans;
}

export interface ApiErrorBody {
    code: string;
    message: string;
}
