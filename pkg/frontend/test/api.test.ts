import { afterEach, describe, expect, it, vi } from "vitest";

import {
    ServiceError,
    createSession,
    fetchExport,
    submitJudgment,
} from "../src/api.js";
import { MockService, flow, rejectingFetch } from "./mock.js";

afterEach(() => {
    vi.unstubAllGlobals();
});

describe("api client", () => {
    it("posts the session config verbatim", async () => {
        const service = new MockService();
        vi.stubGlobal("fetch", service.fetch);
        const config = {
            policy: "eig",
            hyperparams: {
                log_log_odds_alpha: 1.0,
                theta_prior: 0.025,
                steps: "to_convergence" as const,
            },
            seed: 11,
        };
        const created = await createSession(config);
        expect(created.id).toBe(flow.create.response.id);
        expect(service.log[0]).toEqual({
            method: "POST",
            path: "/sessions",
            body: config,
        });
    });

    it("surfaces the service's error code and message", async () => {
        vi.stubGlobal("fetch", rejectingFetch);
        const attempt = createSession({
            policy: "eig",
            hyperparams: {
                log_log_odds_alpha: 1.0,
                theta_prior: 1.5,
                steps: "to_convergence",
            },
        });
        await expect(attempt).rejects.toThrowError(ServiceError);
        await expect(attempt).rejects.toMatchObject({
            status: 422,
            code: "invalid_hyperparams",
        });
    });

    it("sends judgments as {accept} bodies", async () => {
        const service = new MockService();
        vi.stubGlobal("fetch", service.fetch);
        const summary = await submitJudgment(flow.create.response.id, flow.steps[0].accept);
        expect(summary.step).toBe(1);
        expect(service.log[0].body).toEqual({ accept: flow.steps[0].accept });
    });

    it("takes the download filename from Content-Disposition", async () => {
        const service = new MockService();
        vi.stubGlobal("fetch", service.fetch);
        const transcript = await fetchExport(flow.create.response.id);
        expect(transcript.filename).toBe(flow.export.filename);
        expect(transcript.filename).toContain(flow.create.response.id);
        expect(transcript.text).toBe(flow.export.text);
    });
});
