import { defineConfig } from "vitest/config";

export default defineConfig({
  test: {
    environment: "node",
    include: ["tests/**/*.test.ts"],
    // the e2e suite boots the Python service, which takes a moment
    testTimeout: 30000,
    hookTimeout: 30000,
  },
});
