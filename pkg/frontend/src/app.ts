import {
    ServiceError,
    createSession,
    fetchExport,
    fetchQuery,
    fetchState,
    submitJudgment,
} from "./api.js";
import { drawEntropyChart } from "./chart.js";
import { renderConstraint } from "./constraints.js";
import { SessionConfig, StateSummary, StepsSchedule } from "./types.js";

const POLICIES = ["eig", "label-entropy", "eig-history", "eig-model", "eig-mixed", "uniform"];

export type SaveFn = (filename: string, text: string) => void;

export interface InstallOptions {
    /** File-save hook; tests capture the transcript instead of downloading. */
    save?: SaveFn;
}

export interface AppHandle {
    teardown(): void;
}

function el<K extends keyof HTMLElementTagNameMap>(
    tag: K,
    id?: string,
    text?: string,
): HTMLElementTagNameMap[K] {
    const node = document.createElement(tag);
    if (id) {
        node.id = id;
    }
    if (text !== undefined) {
        node.textContent = text;
    }
    return node;
}

function browserSave(filename: string, text: string): void {
    const blob = new Blob([text], { type: "application/json" });
    const url = URL.createObjectURL(blob);
    const anchor = el("a");
    anchor.href = url;
    anchor.download = filename;
    document.body.appendChild(anchor);
    anchor.click();
    anchor.remove();
    URL.revokeObjectURL(url);
}

export function install(root: HTMLElement, options: InstallOptions = {}): AppHandle {
    const save = options.save ?? browserSave;

    let sessionId: string | null = null;
    let pendingWord: string | null = null;
    let stepCount = 0;
    let inFlight = false;
    const entropySeries: number[] = [];

    // -- setup panel ------------------------------------------------------

    const setup = el("section", "setup");
    root.appendChild(setup);
    setup.appendChild(el("h2", undefined, "New session"));

    const policySelect = el("select", "policy");
    for (const name of POLICIES) {
        const option = el("option", undefined, name);
        option.value = name;
        policySelect.appendChild(option);
    }
    const alphaInput = el("input", "alpha-loglog");
    alphaInput.type = "number";
    alphaInput.step = "any";
    alphaInput.value = "1.0";
    const priorInput = el("input", "prior");
    priorInput.type = "number";
    priorInput.step = "any";
    priorInput.value = "0.025";
    const stepsSelect = el("select", "steps");
    for (const [value, label] of [["to_convergence", "refit to convergence"], ["one", "single sweep"]]) {
        const option = el("option", undefined, label);
        option.value = value;
        stepsSelect.appendChild(option);
    }
    const seedInput = el("input", "seed");
    seedInput.type = "number";
    seedInput.placeholder = "random";
    const resumeInput = el("input", "resume");
    resumeInput.type = "text";
    resumeInput.placeholder = "existing session id";

    const fields: Array<[string, HTMLElement]> = [
        ["policy", policySelect],
        ["log log-odds", alphaInput],
        ["prior", priorInput],
        ["steps", stepsSelect],
        ["seed", seedInput],
        ["resume", resumeInput],
    ];
    for (const [caption, field] of fields) {
        const label = el("label", undefined, caption + " ");
        label.appendChild(field);
        setup.appendChild(label);
    }

    const startBtn = el("button", "start", "Start");
    setup.appendChild(startBtn);
    const errorBox = el("div", "error");
    setup.appendChild(errorBox);

    // -- elicitation panel ------------------------------------------------

    const elicit = el("section", "elicit");
    elicit.hidden = true;
    root.appendChild(elicit);

    const sessionLabel = el("div", "session-label");
    elicit.appendChild(sessionLabel);
    const queryWord = el("div", "query-word");
    elicit.appendChild(queryWord);
    const stepLabel = el("div", "step-count");
    elicit.appendChild(stepLabel);

    const buttons = el("div", "judgment-buttons");
    elicit.appendChild(buttons);
    const acceptBtn = el("button", "accept", "Accept (Y)");
    acceptBtn.className = "accept";
    buttons.appendChild(acceptBtn);
    const rejectBtn = el("button", "reject", "Reject (N)");
    rejectBtn.className = "reject";
    buttons.appendChild(rejectBtn);
    const exportBtn = el("button", "export", "Export transcript");
    exportBtn.disabled = true;
    buttons.appendChild(exportBtn);

    const columns = el("div", "columns");
    elicit.appendChild(columns);

    const historyPane = el("div", "history-pane");
    columns.appendChild(historyPane);
    historyPane.appendChild(el("h3", undefined, "Judgments"));
    const historyList = el("ol", "history");
    historyPane.appendChild(historyList);

    const beliefPane = el("div", "belief-pane");
    columns.appendChild(beliefPane);
    beliefPane.appendChild(el("h3", undefined, "Posterior entropy"));
    const chart = el("canvas", "entropy-chart");
    chart.width = 360;
    chart.height = 160;
    beliefPane.appendChild(chart);
    const entropyLabel = el("div", "entropy-now");
    beliefPane.appendChild(entropyLabel);
    const gainMeans = el("div", "gain-means");
    beliefPane.appendChild(gainMeans);
    beliefPane.appendChild(el("h3", undefined, "Constraints above prior"));
    const constraintsBox = el("div", "constraints");
    beliefPane.appendChild(constraintsBox);
    beliefPane.appendChild(el("h3", undefined, "Probe words"));
    const probeTable = el("table", "probes");
    beliefPane.appendChild(probeTable);

    // -- rendering --------------------------------------------------------

    function showError(err: unknown): void {
        if (err instanceof ServiceError) {
            errorBox.textContent = `${err.code}: ${err.message}`;
        } else {
            errorBox.textContent = String(err);
        }
    }

    function appendHistory(word: string, accept: boolean): void {
        const item = el("li", undefined, word);
        item.className = accept ? "accept" : "reject";
        historyList.appendChild(item);
    }

    function renderConstraints(summary: StateSummary): void {
        constraintsBox.replaceChildren();
        for (const entry of summary.top_constraints) {
            const row = el("div");
            row.className = "constraint-row";
            row.appendChild(el("span", undefined, renderConstraint(entry.index)));
            const track = el("div");
            track.className = "bar-track";
            const bar = el("div");
            bar.className = "bar";
            bar.style.width = `${(entry.q * 100).toFixed(1)}%`;
            track.appendChild(bar);
            row.appendChild(track);
            row.appendChild(el("span", undefined, entry.q.toFixed(3)));
            constraintsBox.appendChild(row);
        }
        if (summary.top_constraints.length === 0) {
            constraintsBox.appendChild(el("div", undefined, "none above the prior yet"));
        }
    }

    function renderProbes(summary: StateSummary): void {
        probeTable.replaceChildren();
        for (const probe of summary.probe_predictions) {
            const row = el("tr");
            row.appendChild(el("td", undefined, probe.word));
            row.appendChild(el("td", undefined, probe.p_accept.toFixed(3)));
            probeTable.appendChild(row);
        }
    }

    function applySummary(summary: StateSummary): void {
        stepCount = summary.step;
        stepLabel.textContent = `step ${summary.step}`;
        entropySeries.push(summary.posterior_entropy);
        drawEntropyChart(chart, entropySeries);
        entropyLabel.textContent = `${summary.posterior_entropy.toFixed(3)} nats`;
        const means = summary.history_means;
        gainMeans.textContent =
            `mean gain, train: ${means.train === null ? "n/a" : means.train.toFixed(4)},` +
            ` other: ${means.nontrain === null ? "n/a" : means.nontrain.toFixed(4)}`;
        renderConstraints(summary);
        renderProbes(summary);
        exportBtn.disabled = stepCount === 0;
    }

    async function refreshQuery(): Promise<void> {
        if (!sessionId) {
            return;
        }
        const query = await fetchQuery(sessionId);
        pendingWord = query.word;
        queryWord.textContent = query.word;
    }

    // -- actions ----------------------------------------------------------

    async function start(): Promise<void> {
        if (inFlight) {
            return;
        }
        inFlight = true;
        startBtn.disabled = true;
        errorBox.textContent = "";
        try {
            const resume = resumeInput.value.trim();
            if (resume) {
                sessionId = resume;
            } else {
                const config: SessionConfig = {
                    policy: policySelect.value,
                    hyperparams: {
                        log_log_odds_alpha: Number(alphaInput.value),
                        theta_prior: Number(priorInput.value),
                        steps: stepsSelect.value as StepsSchedule,
                    },
                };
                if (seedInput.value.trim()) {
                    config.seed = Number(seedInput.value);
                }
                sessionId = (await createSession(config)).id;
            }
            sessionLabel.textContent = `session ${sessionId}`;
            entropySeries.length = 0;
            historyList.replaceChildren();
            applySummary(await fetchState(sessionId));
            await refreshQuery();
            elicit.hidden = false;
        } catch (err) {
            sessionId = null;
            elicit.hidden = true;
            showError(err);
        } finally {
            inFlight = false;
            startBtn.disabled = false;
        }
    }

    async function judge(accept: boolean): Promise<void> {
        // one request in flight and one judgment per displayed query
        if (inFlight || !sessionId || pendingWord === null) {
            return;
        }
        inFlight = true;
        acceptBtn.disabled = true;
        rejectBtn.disabled = true;
        const word = pendingWord;
        try {
            const summary = await submitJudgment(sessionId, accept);
            pendingWord = null;
            appendHistory(word, accept);
            applySummary(summary);
            await refreshQuery();
        } catch (err) {
            showError(err);
        } finally {
            inFlight = false;
            acceptBtn.disabled = false;
            rejectBtn.disabled = false;
        }
    }

    async function exportTranscript(): Promise<void> {
        if (!sessionId || stepCount === 0) {
            return;
        }
        try {
            const transcript = await fetchExport(sessionId);
            save(transcript.filename, transcript.text);
        } catch (err) {
            showError(err);
        }
    }

    startBtn.onclick = () => void start();
    acceptBtn.onclick = () => void judge(true);
    rejectBtn.onclick = () => void judge(false);
    exportBtn.onclick = () => void exportTranscript();

    function onKey(event: KeyboardEvent): void {
        const target = event.target as HTMLElement | null;
        if (target && ["INPUT", "TEXTAREA", "SELECT"].includes(target.tagName)) {
            return;
        }
        if (event.key === "y" || event.key === "Y") {
            void judge(true);
        } else if (event.key === "n" || event.key === "N") {
            void judge(false);
        }
    }
    document.addEventListener("keydown", onKey);

    return {
        teardown(): void {
            document.removeEventListener("keydown", onKey);
            root.replaceChildren();
        },
    };
}
