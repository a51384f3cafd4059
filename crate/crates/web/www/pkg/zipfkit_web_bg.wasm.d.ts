/* tslint:disable */
/* eslint-disable */
export const memory: WebAssembly.Memory;
export const __wbg_analysis_free: (a: number, b: number) => void;
export const __wbg_monkeyrun_free: (a: number, b: number) => void;
export const analysis_a: (a: number) => number;
export const analysis_c: (a: number) => number;
export const analysis_df: (a: number) => number;
export const analysis_expected: (a: number) => [number, number];
export const analysis_model: (a: number) => [number, number];
export const analysis_observed: (a: number) => [number, number];
export const analysis_p: (a: number) => [number, number];
export const analysis_surfaces: (a: number) => [number, number];
export const analysis_tokens: (a: number) => number;
export const analysis_types: (a: number) => number;
export const analysis_x2: (a: number) => number;
export const analyze: (a: number, b: number, c: number, d: number, e: number, f: number, g: number, h: number, i: number) => [number, number, number];
export const monkey: (a: number, b: number, c: number, d: bigint) => [number, number, number];
export const monkeyrun_frequencies: (a: number) => [number, number];
export const monkeyrun_slope: (a: number) => number;
export const monkeyrun_types: (a: number) => number;
export const monkeyrun_words: (a: number) => number;
export const segment: (a: number, b: number) => [number, number];
export const monkeyrun_r2: (a: number) => number;
export const __wbindgen_externrefs: WebAssembly.Table;
export const __wbindgen_free: (a: number, b: number, c: number) => void;
export const __externref_drop_slice: (a: number, b: number) => void;
export const __wbindgen_malloc: (a: number, b: number) => number;
export const __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
export const __externref_table_dealloc: (a: number) => void;
export const __wbindgen_start: () => void;
