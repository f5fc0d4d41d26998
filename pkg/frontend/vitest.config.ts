import { defineConfig } from "vitest/config";

export default defineConfig({
  test: {
    environment: "happy-dom",
    environmentOptions: {
      happyDOM: { url: "http://127.0.0.1/" },
    },
    globalSetup: "./tests/global-setup.ts",
    testTimeout: 30_000,
    hookTimeout: 90_000,
  },
});
