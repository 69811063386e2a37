"use strict";
/** Typed client for the avoidance game service.
 *
 * The UI never evaluates game rules: every status, legality verdict,
 * symmetry flag and loss highlight in these types is server-computed.
 */
Object.defineProperty(exports, "__esModule", { value: true });
exports.GameApi = exports.ApiError = void 0;
class ApiError extends Error {
    status;
    reason;
    constructor(status, reason) {
        super(`${status}: ${reason}`);
        this.status = status;
        this.reason = reason;
    }
}
exports.ApiError = ApiError;
async function parse(resp) {
    const text = await resp.text();
    const body = text ? JSON.parse(text) : null;
    if (!resp.ok) {
        throw new ApiError(resp.status, body?.error ?? resp.statusText);
    }
    return body;
}
class GameApi {
    base;
    constructor(base) {
        this.base = base;
    }
    url(path) {
        return this.base.replace(/\/$/, "") + path;
    }
    async families() {
        return parse(await fetch(this.url("/api/families")));
    }
    async createGame(req) {
        return parse(await fetch(this.url("/api/games"), {
            method: "POST",
            headers: { "Content-Type": "application/json" },
            body: JSON.stringify(req),
        }));
    }
    async getGame(id) {
        return parse(await fetch(this.url(`/api/games/${id}`)));
    }
    async move(id, edge) {
        return parse(await fetch(this.url(`/api/games/${id}/moves`), {
            method: "POST",
            headers: { "Content-Type": "application/json" },
            body: JSON.stringify({ edge }),
        }));
    }
    async transcript(id) {
        return parse(await fetch(this.url(`/api/games/${id}/transcript`)));
    }
    async deleteGame(id) {
        const resp = await fetch(this.url(`/api/games/${id}`), { method: "DELETE" });
        if (!resp.ok && resp.status !== 204) {
            throw new ApiError(resp.status, resp.statusText);
        }
    }
}
exports.GameApi = GameApi;
//# sourceMappingURL=api.js.map