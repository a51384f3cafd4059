/* tslint:disable */
/* eslint-disable */

/**
 * A fitted model together with the observed and expected curves.
 */
export class Analysis {
    private constructor();
    free(): void;
    [Symbol.dispose](): void;
    /**
     * Expected frequency at ranks 1..=V under the fitted model.
     */
    expected(): Float64Array;
    /**
     * Observed frequency at ranks 1..=V.
     */
    observed(): Float64Array;
    /**
     * Surface forms in rank order.
     */
    surfaces(): string[];
    readonly a: number;
    readonly c: number;
    readonly df: number | undefined;
    readonly model: string;
    readonly p: number | undefined;
    readonly tokens: number;
    readonly types: number;
    readonly x2: number;
}

/**
 * Rank-frequency curve of a monkey text with its log-log regression.
 */
export class MonkeyRun {
    private constructor();
    free(): void;
    [Symbol.dispose](): void;
    frequencies(): Float64Array;
    readonly r2: number;
    readonly slope: number;
    readonly types: number;
    readonly words: number;
}

export function analyze(input: string, kind: string, bound_morphemes: boolean, model: string, method: string): Analysis;

export function monkey(alphabet: number, space_prob: number, chars: number, seed: bigint): MonkeyRun;

export function segment(text: string): string;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly __wbg_analysis_free: (a: number, b: number) => void;
    readonly __wbg_monkeyrun_free: (a: number, b: number) => void;
    readonly analysis_a: (a: number) => number;
    readonly analysis_c: (a: number) => number;
    readonly analysis_df: (a: number) => number;
    readonly analysis_expected: (a: number) => [number, number];
    readonly analysis_model: (a: number) => [number, number];
    readonly analysis_observed: (a: number) => [number, number];
    readonly analysis_p: (a: number) => [number, number];
    readonly analysis_surfaces: (a: number) => [number, number];
    readonly analysis_tokens: (a: number) => number;
    readonly analysis_types: (a: number) => number;
    readonly analysis_x2: (a: number) => number;
    readonly analyze: (a: number, b: number, c: number, d: number, e: number, f: number, g: number, h: number, i: number) => [number, number, number];
    readonly monkey: (a: number, b: number, c: number, d: bigint) => [number, number, number];
    readonly monkeyrun_frequencies: (a: number) => [number, number];
    readonly monkeyrun_slope: (a: number) => number;
    readonly monkeyrun_types: (a: number) => number;
    readonly monkeyrun_words: (a: number) => number;
    readonly segment: (a: number, b: number) => [number, number];
    readonly monkeyrun_r2: (a: number) => number;
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
    readonly __externref_drop_slice: (a: number, b: number) => void;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
    readonly __externref_table_dealloc: (a: number) => void;
    readonly __wbindgen_start: () => void;
}

export type SyncInitInput = BufferSource | WebAssembly.Module;

/**
 * Instantiates the given `module`, which can either be bytes or
 * a precompiled `WebAssembly.Module`.
 *
 * @param {{ module: SyncInitInput }} module - Passing `SyncInitInput` directly is deprecated.
 *
 * @returns {InitOutput}
 */
export function initSync(module: { module: SyncInitInput } | SyncInitInput): InitOutput;

/**
 * If `module_or_path` is {RequestInfo} or {URL}, makes a request and
 * for everything else, calls `WebAssembly.instantiate` directly.
 *
 * @param {{ module_or_path: InitInput | Promise<InitInput> }} module_or_path - Passing `InitInput` directly is deprecated.
 *
 * @returns {Promise<InitOutput>}
 */
export default function __wbg_init (module_or_path?: { module_or_path: InitInput | Promise<InitInput> } | InitInput | Promise<InitInput>): Promise<InitOutput>;
